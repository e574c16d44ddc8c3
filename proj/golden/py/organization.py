# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from . import Entity, Field, register


@register
class Organization(Entity):
    """An organization such as a company, club, or institution."""

    CLASS_IRI = "https://know.dev/Organization"
