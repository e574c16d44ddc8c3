# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from . import Entity, Field, register


@register
class Event(Entity):
    """Something that happens at a given time and place."""

    CLASS_IRI = "https://know.dev/Event"
