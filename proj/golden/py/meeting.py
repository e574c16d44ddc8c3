# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from . import Entity, Field, register
from .event import Event


@register
class Meeting(Event):
    CLASS_IRI = "https://know.dev/Meeting"
