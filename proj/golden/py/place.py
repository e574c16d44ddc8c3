# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from . import Entity, Field, register


@register
class Place(Entity):
    """A place. Not necessarily on the surface of the Earth."""

    CLASS_IRI = "https://know.dev/Place"
