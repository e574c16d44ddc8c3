# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

from typing import List, Optional

from . import Entity, Field, register


@register
class Person(Entity):
    """A person, real or fictional."""

    CLASS_IRI = "https://know.dev/Person"

    age: Optional[int]
    aunt: List[str]
    brother: List[str]
    child: List[str]
    father: Optional[str]
    mother: Optional[str]
    name: Optional[str]
    nephew: List[str]
    niece: List[str]
    parent: List[str]
    sibling: List[str]
    sister: List[str]
    uncle: List[str]

    FIELDS = (
        Field("age", "age", "https://know.dev/age", "integer", True),
        Field("aunt", "aunt", "https://know.dev/aunt", "ref", False),
        Field("brother", "brother", "https://know.dev/brother", "ref", False),
        Field("child", "child", "https://know.dev/child", "ref", False),
        Field("father", "father", "https://know.dev/father", "ref", True),
        Field("mother", "mother", "https://know.dev/mother", "ref", True),
        Field("name", "name", "https://know.dev/name", "text", True),
        Field("nephew", "nephew", "https://know.dev/nephew", "ref", False),
        Field("niece", "niece", "https://know.dev/niece", "ref", False),
        Field("parent", "parent", "https://know.dev/parent", "ref", False),
        Field("sibling", "sibling", "https://know.dev/sibling", "ref", False),
        Field("sister", "sister", "https://know.dev/sister", "ref", False),
        Field("uncle", "uncle", "https://know.dev/uncle", "ref", False),
    )
