// Python SDK built on a runtime registry keyed by class IRI. The package
// __init__ holds the runtime and imports every type module.

#include "common.hpp"

namespace knowforge::emit::detail {

namespace {

constexpr std::string_view kRuntimeHead = R"py(
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
)py";

std::string module_name(const TypeSpec& t, const TargetProfile& profile) {
  std::string file = profile.file_name(t.words);
  return file.substr(0, file.size() - profile.file_extension.size());
}

std::string py_doc(const TypeSpec& type, std::string_view indent) {
  if (!type.doc) return "";
  const auto lines = wrap(*type.doc, 72);
  if (lines.size() == 1) return std::string(indent) + "\"\"\"" + lines.front() + "\"\"\"\n\n";
  std::string out = std::string(indent) + "\"\"\"" + lines.front() + "\n";
  for (size_t i = 1; i < lines.size(); ++i) out += std::string(indent) + lines[i] + "\n";
  return out + std::string(indent) + "\"\"\"\n\n";
}

std::string type_module(const TypeSpec& type, const TargetProfile& profile,
                        const std::map<Iri, const TypeSpec*>& by_iri) {
  const std::string name = profile.type_name(type.words);
  bool any_single = false;
  bool any_many = false;
  for (const auto& f : type.own_fields) (is_single(f) ? any_single : any_many) = true;

  std::string out = "\n";
  std::string typing;
  if (any_many) typing = "List";
  if (any_single) typing += typing.empty() ? "Optional" : ", Optional";
  if (!typing.empty()) out += "from typing import " + typing + "\n\n";
  out += "from . import Entity, Field, register\n";

  std::string base = "Entity";
  if (type.parent) {
    const auto it = by_iri.find(*type.parent);
    if (it == by_iri.end()) {
      throw codegen::GenerationError("parent of " + type.class_iri.str() + " is not in the IR");
    }
    base = profile.type_name(it->second->words);
    out += "from ." + module_name(*it->second, profile) + " import " + base + "\n";
  }

  out += "\n\n@register\nclass " + name + "(" + base + "):\n";
  out += py_doc(type, "    ");
  out += "    CLASS_IRI = " + string_literal(type.class_iri.str()) + "\n";
  if (!type.own_fields.empty()) {
    out += "\n";
    for (const auto& f : type.own_fields) {
      out += "    " + profile.field_name(f.words) + ": " + field_type(profile, f) + "\n";
    }
    out += "\n    FIELDS = (\n";
    for (const auto& f : type.own_fields) {
      const std::string kind = f.is_reference() ? "ref" : std::string(codegen::to_string(value_kind(f)));
      out += "        Field(" + string_literal(profile.field_name(f.words)) + ", " + string_literal(json_key(f)) + ", " +
             string_literal(f.property_iri.str()) + ", " + string_literal(kind) + ", " +
             (is_single(f) ? "True" : "False") + "),\n";
    }
    out += "    )\n";
  }
  return out;
}

}  // namespace

FileSet emit_py(const std::vector<TypeSpec>& ir, const TargetProfile& profile) {
  std::map<Iri, const TypeSpec*> by_iri;
  for (const auto& t : ir) by_iri.emplace(t.class_iri, &t);

  FileSet files;
  for (const auto& t : ir) add_file(files, profile.file_name(t.words), type_module(t, profile, by_iri));

  const auto types = by_type_name(ir, profile);
  std::string manifest =
      "\n\"\"\"KNOW ontology SDK.\n\n"
      "Generated types register themselves by class IRI; from_json() picks the\n"
      "type from the \"type\" member of a JSON instance.\n\"\"\"\n";
  manifest += kRuntimeHead;
  manifest += "\n\n# Generated type names, sorted.\nTYPE_NAMES = (";
  for (const TypeSpec* t : types) manifest += "\n    " + string_literal(profile.type_name(t->words)) + ",";
  manifest += types.empty() ? ")\n" : "\n)\n";
  if (!types.empty()) manifest += "\n";
  for (const TypeSpec* t : types) {
    manifest += "from ." + module_name(*t, profile) + " import " + profile.type_name(t->words) +
                "  # noqa: E402\n";
  }
  add_file(files, "__init__.py", std::move(manifest));
  return files;
}

}  // namespace knowforge::emit::detail
