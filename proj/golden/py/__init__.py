# Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
# SPDX-License-Identifier: Unlicense

"""KNOW ontology SDK.

Generated types register themselves by class IRI; from_json() picks the
type from the "type" member of a JSON instance.
"""

import json
import math
from decimal import Decimal
from typing import Any, ClassVar, Dict, List, Tuple, Type

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

_DATATYPES = {
    "text": "http://www.w3.org/2001/XMLSchema#string",
    "integer": "http://www.w3.org/2001/XMLSchema#integer",
    "decimal": "http://www.w3.org/2001/XMLSchema#decimal",
    "boolean": "http://www.w3.org/2001/XMLSchema#boolean",
    "date": "http://www.w3.org/2001/XMLSchema#date",
    "datetime": "http://www.w3.org/2001/XMLSchema#dateTime",
    "iri": "http://www.w3.org/2001/XMLSchema#anyURI",
}

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


class Error(Exception):
    pass


class UnknownProperty(Error):
    pass


class CardinalityViolation(Error):
    pass


class InvalidValue(Error):
    pass


class UnknownType(Error):
    pass


class Field:
    """One property of a generated type.

    kind is a scalar kind name, or "ref" for references to other entities.
    """

    __slots__ = ("attr", "key", "iri", "kind", "single")

    def __init__(self, attr: str, key: str, iri: str, kind: str, single: bool) -> None:
        self.attr = attr
        self.key = key
        self.iri = iri
        self.kind = kind
        self.single = single


def canonical_decimal(value: float) -> str:
    """Shortest round-trip fixed notation, always with a fractional part."""
    if not math.isfinite(value):
        raise InvalidValue("decimal value is not finite")
    if value == 0:
        return "0.0"
    text = format(Decimal(repr(float(value))), "f")
    return text if "." in text else text + ".0"


def _lexical(kind: str, value: Any) -> str:
    if kind == "integer":
        return str(value)
    if kind == "decimal":
        return canonical_decimal(value)
    if kind == "boolean":
        return "true" if value else "false"
    return value


def _json_value(kind: str, value: Any) -> str:
    if kind in ("integer", "decimal", "boolean"):
        return _lexical(kind, value)
    return json.dumps(value, ensure_ascii=False)


_NT_ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\r": "\\r", "\t": "\\t", "\b": "\\b", "\f": "\\f"}


def _nt_escape(text: str) -> str:
    out = []
    for ch in text:
        if ch in _NT_ESCAPES:
            out.append(_NT_ESCAPES[ch])
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append("\\u%04X" % ord(ch))
        else:
            out.append(ch)
    return "".join(out)


def _decode(field: Field, value: Any) -> Any:
    kind = field.kind
    if kind == "integer":
        if isinstance(value, bool) or not isinstance(value, int) or not _INT64_MIN <= value <= _INT64_MAX:
            raise InvalidValue("member %r expects a 64-bit integer" % field.key)
        return value
    if kind == "decimal":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidValue("member %r expects a number" % field.key)
        value = float(value)
        if not math.isfinite(value):
            raise InvalidValue("member %r is not finite" % field.key)
        return value
    if kind == "boolean":
        if not isinstance(value, bool):
            raise InvalidValue("member %r expects a boolean" % field.key)
        return value
    if not isinstance(value, str):
        raise InvalidValue("member %r expects a string" % field.key)
    return value


def _reject_constant(name: str) -> Any:
    raise InvalidValue("malformed JSON: %s is not a JSON value" % name)


def _parse(text: str) -> Dict[str, Any]:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise InvalidValue("malformed JSON: %s" % e) from e
    if not isinstance(obj, dict):
        raise InvalidValue("instance must be a JSON object")
    if not isinstance(obj.get("type"), str):
        raise InvalidValue('instance needs a string "type" member')
    if not isinstance(obj.get("id"), str):
        raise InvalidValue('instance needs a string "id" member')
    return obj


_REGISTRY: Dict[str, Type["Entity"]] = {}


def register(cls: Type["Entity"]) -> Type["Entity"]:
    """Class decorator adding a generated type to the registry."""
    _REGISTRY[cls.CLASS_IRI] = cls
    return cls


def registered_types() -> Dict[str, Type["Entity"]]:
    return dict(_REGISTRY)


class Entity:
    """Base of every generated type.

    Subclasses list their own properties in FIELDS; inherited ones are
    merged in at class creation.
    """

    CLASS_IRI: ClassVar[str] = ""
    FIELDS: ClassVar[Tuple[Field, ...]] = ()
    ALL_FIELDS: ClassVar[Tuple[Field, ...]] = ()
    _BY_KEY: ClassVar[Dict[str, Field]] = {}
    _BY_ATTR: ClassVar[Dict[str, Field]] = {}

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        merged: Dict[str, Field] = {}
        for base in reversed(cls.__mro__):
            for field in base.__dict__.get("FIELDS", ()):
                merged[field.key] = field
        cls.ALL_FIELDS = tuple(sorted(merged.values(), key=lambda f: f.key))
        cls._BY_KEY = {f.key: f for f in cls.ALL_FIELDS}
        cls._BY_ATTR = {f.attr: f for f in cls.ALL_FIELDS}

    def __init__(self, id: str, **values: Any) -> None:
        self.id = id
        for field in self.ALL_FIELDS:
            setattr(self, field.attr, None if field.single else [])
        for attr, value in values.items():
            if attr not in self._BY_ATTR:
                raise UnknownProperty("%s has no property %r" % (type(self).__name__, attr))
            setattr(self, attr, value)

    def __eq__(self, other: object) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.id == other.id and all(
            getattr(self, f.attr) == getattr(other, f.attr) for f in self.ALL_FIELDS
        )

    def __repr__(self) -> str:
        parts = ["id=%r" % self.id]
        for field in self.ALL_FIELDS:
            value = getattr(self, field.attr)
            if value not in (None, []):
                parts.append("%s=%r" % (field.attr, value))
        return "%s(%s)" % (type(self).__name__, ", ".join(parts))

    def _values(self, field: Field) -> List[Any]:
        value = getattr(self, field.attr)
        if field.single:
            if isinstance(value, list):
                raise CardinalityViolation("%s is single-valued" % field.attr)
            return [] if value is None else [value]
        return list(value)

    def to_json(self) -> str:
        members = ['"id": ' + json.dumps(self.id, ensure_ascii=False),
                   '"type": ' + json.dumps(self.CLASS_IRI, ensure_ascii=False)]
        for field in self.ALL_FIELDS:
            values = self._values(field)
            if not values:
                continue
            key = json.dumps(field.key) + ": "
            if field.single:
                members.append(key + _json_value(field.kind, values[0]))
            else:
                items = ",\n".join("    " + _json_value(field.kind, v) for v in values)
                members.append(key + "[\n" + items + "\n  ]")
        return "{\n  " + ",\n  ".join(members) + "\n}\n"

    def to_triples(self) -> str:
        subject = "<%s>" % self.id
        lines = ["%s <%s> <%s> .\n" % (subject, RDF_TYPE, self.CLASS_IRI)]
        for field in self.ALL_FIELDS:
            for value in self._values(field):
                if field.kind == "ref":
                    obj = "<%s>" % value
                else:
                    obj = '"%s"' % _nt_escape(_lexical(field.kind, value))
                    if field.kind != "text":
                        obj += "^^<%s>" % _DATATYPES[field.kind]
                lines.append("%s <%s> %s .\n" % (subject, field.iri, obj))
        return "".join(sorted(lines))

    @classmethod
    def from_dict(cls, obj: Dict[str, Any]) -> "Entity":
        if obj.get("type") != cls.CLASS_IRI:
            raise InvalidValue("instance type is not %s" % cls.CLASS_IRI)
        out = cls(obj["id"])
        for key, value in obj.items():
            if key in ("id", "type"):
                continue
            field = cls._BY_KEY.get(key)
            if field is None:
                raise UnknownProperty("member %r is not a property of %s" % (key, cls.CLASS_IRI))
            if field.single:
                if isinstance(value, list):
                    raise CardinalityViolation("member %r is single-valued" % key)
                setattr(out, field.attr, None if value is None else _decode(field, value))
            else:
                if not isinstance(value, list):
                    raise InvalidValue("member %r must be an array" % key)
                setattr(out, field.attr, [_decode(field, v) for v in value])
        return out

    @classmethod
    def from_json(cls, text: str) -> "Entity":
        return cls.from_dict(_parse(text))


def from_json(text: str) -> Entity:
    """Decodes an instance of any registered type, chosen by its "type" member."""
    obj = _parse(text)
    cls = _REGISTRY.get(obj["type"])
    if cls is None:
        raise UnknownType("no generated type for %s" % obj["type"])
    return cls.from_dict(obj)


# Generated type names, sorted.
TYPE_NAMES = (
    "Airport",
    "Appointment",
    "Birthday",
    "Cafe",
    "Event",
    "Group",
    "Holiday",
    "Hospital",
    "Hotel",
    "Landmark",
    "Meeting",
    "Organization",
    "Party",
    "Person",
    "Place",
    "PlaceOfWorship",
    "Restaurant",
)

from .airport import Airport  # noqa: E402
from .appointment import Appointment  # noqa: E402
from .birthday import Birthday  # noqa: E402
from .cafe import Cafe  # noqa: E402
from .event import Event  # noqa: E402
from .group import Group  # noqa: E402
from .holiday import Holiday  # noqa: E402
from .hospital import Hospital  # noqa: E402
from .hotel import Hotel  # noqa: E402
from .landmark import Landmark  # noqa: E402
from .meeting import Meeting  # noqa: E402
from .organization import Organization  # noqa: E402
from .party import Party  # noqa: E402
from .person import Person  # noqa: E402
from .place import Place  # noqa: E402
from .place_of_worship import PlaceOfWorship  # noqa: E402
from .restaurant import Restaurant  # noqa: E402
