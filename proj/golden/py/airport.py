# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from . import Entity, Field, register
from .place import Place


@register
class Airport(Place):
    CLASS_IRI = "https://know.dev/Airport"
