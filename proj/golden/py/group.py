# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from . import Entity, Field, register


@register
class Group(Entity):
    """A group of people."""

    CLASS_IRI = "https://know.dev/Group"
