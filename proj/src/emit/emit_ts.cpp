// TypeScript SDK: an interface per type plus a record class implementing it.
// index.ts holds the runtime and re-exports every type.

#include "common.hpp"

namespace knowforge::emit::detail {

namespace {

constexpr std::string_view kRuntime = R"ts(
export class KnowError extends Error {}
export class UnknownProperty extends KnowError {}
export class CardinalityViolation extends KnowError {}
export class InvalidValue extends KnowError {}
export class UnknownType extends KnowError {}

/** Scalar kind of a field; "ref" marks references to other entities. */
export type ValueKind = "text" | "integer" | "decimal" | "boolean" | "date" | "datetime" | "iri" | "ref";
export type Scalar = string | number | boolean;
export type JsonObject = { [key: string]: unknown };

/** Base of every generated record. */
export interface Entity {
  readonly id: string;
  classIri(): string;
  /** JSON document: id, type, then non-empty members sorted by key. */
  toJson(): string;
  /** Canonical N-Triples, sorted. */
  toTriples(): string;
}

const RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

const DATATYPES: { [kind: string]: string } = {
  integer: "http://www.w3.org/2001/XMLSchema#integer",
  decimal: "http://www.w3.org/2001/XMLSchema#decimal",
  boolean: "http://www.w3.org/2001/XMLSchema#boolean",
  date: "http://www.w3.org/2001/XMLSchema#date",
  datetime: "http://www.w3.org/2001/XMLSchema#dateTime",
  iri: "http://www.w3.org/2001/XMLSchema#anyURI",
};

/** Shortest round-trip fixed notation, always with a fractional part. */
export function canonicalDecimal(value: number): string {
  if (!Number.isFinite(value)) throw new InvalidValue("decimal value is not finite");
  if (value === 0) return "0.0";
  let text = String(value);
  const e = text.indexOf("e");
  if (e >= 0) {
    const negative = text.startsWith("-");
    const mantissa = text.slice(negative ? 1 : 0, e);
    const exponent = Number(text.slice(e + 1));
    const dot = mantissa.indexOf(".");
    const digits = mantissa.replace(".", "");
    const point = (dot < 0 ? mantissa.length : dot) + exponent;
    if (point <= 0) {
      text = "0." + "0".repeat(-point) + digits;
    } else if (point >= digits.length) {
      text = digits + "0".repeat(point - digits.length);
    } else {
      text = digits.slice(0, point) + "." + digits.slice(point);
    }
    if (negative) text = "-" + text;
  }
  return text.includes(".") ? text : text + ".0";
}

function lexical(kind: ValueKind, value: Scalar): string {
  switch (kind) {
    case "integer":
      return String(value);
    case "decimal":
      return canonicalDecimal(value as number);
    case "boolean":
      return value ? "true" : "false";
    default:
      return value as string;
  }
}

function jsonValue(kind: ValueKind, value: Scalar): string {
  if (kind === "integer" || kind === "decimal" || kind === "boolean") return lexical(kind, value);
  return JSON.stringify(value);
}

function ntEscape(text: string): string {
  let out = "";
  for (const ch of text) {
    const c = ch.codePointAt(0) as number;
    if (ch === '"') out += '\\"';
    else if (ch === "\\") out += "\\\\";
    else if (ch === "\n") out += "\\n";
    else if (ch === "\r") out += "\\r";
    else if (ch === "\t") out += "\\t";
    else if (ch === "\b") out += "\\b";
    else if (ch === "\f") out += "\\f";
    else if (c < 0x20 || c === 0x7f) out += "\\u" + c.toString(16).toUpperCase().padStart(4, "0");
    else out += ch;
  }
  return out;
}

// Orders strings by code point, which matches UTF-8 byte order.
function compareCodePoints(a: string, b: string): number {
  const x = Array.from(a, (ch) => ch.codePointAt(0) as number);
  const y = Array.from(b, (ch) => ch.codePointAt(0) as number);
  for (let i = 0; i < Math.min(x.length, y.length); i++) {
    if (x[i] !== y[i]) return x[i] - y[i];
  }
  return x.length - y.length;
}

export class JsonWriter {
  private out: string;

  constructor(id: string, type: string) {
    this.out = '{\n  "id": ' + JSON.stringify(id) + ',\n  "type": ' + JSON.stringify(type);
  }

  single(key: string, value: Scalar | null, kind: ValueKind): void {
    if (value !== null) this.out += ",\n  " + JSON.stringify(key) + ": " + jsonValue(kind, value);
  }

  many(key: string, values: readonly Scalar[], kind: ValueKind): void {
    if (values.length === 0) return;
    const items = values.map((v) => "    " + jsonValue(kind, v));
    this.out += ",\n  " + JSON.stringify(key) + ": [\n" + items.join(",\n") + "\n  ]";
  }

  finish(): string {
    return this.out + "\n}\n";
  }
}

export class TripleWriter {
  private readonly subject: string;
  private readonly lines: string[] = [];

  constructor(id: string, type: string) {
    this.subject = "<" + id + ">";
    this.add(RDF_TYPE, "<" + type + ">");
  }

  single(property: string, value: Scalar | null, kind: ValueKind): void {
    if (value !== null) this.value(property, value, kind);
  }

  many(property: string, values: readonly Scalar[], kind: ValueKind): void {
    for (const v of values) this.value(property, v, kind);
  }

  finish(): string {
    return this.lines.sort(compareCodePoints).join("");
  }

  private value(property: string, value: Scalar, kind: ValueKind): void {
    if (kind === "ref") {
      this.add(property, "<" + value + ">");
      return;
    }
    let object = '"' + ntEscape(lexical(kind, value)) + '"';
    if (kind !== "text") object += "^^<" + DATATYPES[kind] + ">";
    this.add(property, object);
  }

  private add(property: string, object: string): void {
    this.lines.push(this.subject + " <" + property + "> " + object + " .\n");
  }
}

export function parseObject(text: string): JsonObject {
  let value: unknown;
  try {
    value = JSON.parse(text);
  } catch (e) {
    throw new InvalidValue("malformed JSON: " + (e as Error).message);
  }
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new InvalidValue("instance must be a JSON object");
  }
  const object = value as JsonObject;
  if (typeof object["type"] !== "string") throw new InvalidValue('instance needs a string "type" member');
  if (typeof object["id"] !== "string") throw new InvalidValue('instance needs a string "id" member');
  return object;
}

/** Checks id and type; returns the id. */
export function readId(object: JsonObject, classIri: string): string {
  if (object["type"] !== classIri) throw new InvalidValue("instance type is not " + classIri);
  return object["id"] as string;
}

function decodeValue(value: unknown, key: string, kind: ValueKind): Scalar {
  switch (kind) {
    case "integer":
      if (typeof value !== "number" || !Number.isSafeInteger(value)) {
        throw new InvalidValue(`member "${key}" expects an integer`);
      }
      return value;
    case "decimal":
      if (typeof value !== "number") throw new InvalidValue(`member "${key}" expects a number`);
      return value;
    case "boolean":
      if (typeof value !== "boolean") throw new InvalidValue(`member "${key}" expects a boolean`);
      return value;
    default:
      if (typeof value !== "string") throw new InvalidValue(`member "${key}" expects a string`);
      return value;
  }
}

export function readSingle(value: unknown, key: string, kind: ValueKind): Scalar | null {
  if (Array.isArray(value)) throw new CardinalityViolation(`member "${key}" is single-valued`);
  return value === null ? null : decodeValue(value, key, kind);
}

export function readMany(value: unknown, key: string, kind: ValueKind): Scalar[] {
  if (!Array.isArray(value)) throw new InvalidValue(`member "${key}" must be an array`);
  return value.map((v) => decodeValue(v, key, kind));
}

export function unknownMember(key: string, classIri: string): never {
  throw new UnknownProperty(`member "${key}" is not a property of ${classIri}`);
}
)ts";

std::string module_path(const TypeSpec& t, const TargetProfile& profile) {
  std::string file = profile.file_name(t.words);
  return "./" + file.substr(0, file.size() - profile.file_extension.size());
}

std::string kind_of(const FieldSpec& f) {
  return f.is_reference() ? "ref" : std::string(codegen::to_string(value_kind(f)));
}

std::string type_module(const TypeSpec& type, const TargetProfile& profile) {
  const std::string name = profile.type_name(type.words);
  const std::string record = name + "Record";
  const auto fields = by_json_key(type.all_fields);

  std::string out = "\nimport { JsonWriter, TripleWriter, readId";
  if (!fields.empty()) out += ", readMany, readSingle";
  out += ", unknownMember } from \"./index\";\n";
  out += "import type { Entity, JsonObject } from \"./index\";\n\n";

  if (type.doc) out += "/**\n" + doc_block(type, " * ") + " */\n";
  out += "export interface " + name + " extends Entity {\n";
  for (const FieldSpec* f : fields) {
    out += "  " + profile.field_name(f->words) + ": " + field_type(profile, *f) + ";\n";
  }
  out += "}\n\n";

  out += "/** Default implementation of " + name + ". */\n";
  out += "export class " + record + " implements " + name + " {\n";
  out += "  static readonly CLASS_IRI = " + string_literal(type.class_iri.str()) + ";\n\n";
  for (const FieldSpec* f : fields) {
    out += "  " + profile.field_name(f->words) + ": " + field_type(profile, *f) + " = " +
           (is_single(*f) ? "null" : "[]") + ";\n";
  }
  if (!fields.empty()) out += "\n";
  out += "  constructor(readonly id: string) {}\n\n";
  out += "  classIri(): string {\n    return " + record + ".CLASS_IRI;\n  }\n\n";

  out += "  toJson(): string {\n    const w = new JsonWriter(this.id, " + record + ".CLASS_IRI);\n";
  for (const FieldSpec* f : fields) {
    out += std::string("    w.") + (is_single(*f) ? "single" : "many") + "(" + string_literal(json_key(*f)) +
           ", this." + profile.field_name(f->words) + ", " + string_literal(kind_of(*f)) + ");\n";
  }
  out += "    return w.finish();\n  }\n\n";

  out += "  toTriples(): string {\n    const w = new TripleWriter(this.id, " + record + ".CLASS_IRI);\n";
  for (const FieldSpec* f : fields) {
    out += std::string("    w.") + (is_single(*f) ? "single" : "many") + "(" +
           string_literal(f->property_iri.str()) + ", this." + profile.field_name(f->words) + ", " +
           string_literal(kind_of(*f)) + ");\n";
  }
  out += "    return w.finish();\n  }\n\n";

  out += "  static fromObject(object: JsonObject): " + record + " {\n";
  out += "    const record = new " + record + "(readId(object, " + record + ".CLASS_IRI));\n";
  out += "    for (const [key, value] of Object.entries(object)) {\n      switch (key) {\n";
  out += "        case \"id\":\n        case \"type\":\n          break;\n";
  for (const FieldSpec* f : fields) {
    const std::string element = element_type(profile, *f);
    out += "        case " + string_literal(json_key(*f)) + ":\n          record." +
           profile.field_name(f->words) + " = ";
    if (is_single(*f)) {
      out += "readSingle(value, key, " + string_literal(kind_of(*f)) + ") as " + element + " | null;\n";
    } else {
      out += "readMany(value, key, " + string_literal(kind_of(*f)) + ") as " + element + "[];\n";
    }
    out += "          break;\n";
  }
  out += "        default:\n          unknownMember(key, " + record + ".CLASS_IRI);\n";
  out += "      }\n    }\n    return record;\n  }\n";
  out += "}\n";
  return out;
}

}  // namespace

FileSet emit_ts(const std::vector<TypeSpec>& ir, const TargetProfile& profile) {
  FileSet files;
  for (const auto& t : ir) add_file(files, profile.file_name(t.words), type_module(t, profile));

  const auto types = by_type_name(ir, profile);
  std::string manifest(kRuntime);
  for (const TypeSpec* t : types) {
    const std::string name = profile.type_name(t->words);
    manifest += "\nimport { " + name + "Record } from \"" + module_path(*t, profile) + "\";";
  }
  if (!types.empty()) manifest += "\n";
  for (const TypeSpec* t : types) {
    const std::string name = profile.type_name(t->words);
    manifest += "\nexport type { " + name + " } from \"" + module_path(*t, profile) + "\";";
  }
  if (!types.empty()) {
    manifest += "\n\nexport {";
    for (const TypeSpec* t : types) manifest += "\n  " + profile.type_name(t->words) + "Record,";
    manifest += "\n};";
  }
  manifest += "\n\n/** Generated type names, sorted. */\nexport const TYPE_NAMES: readonly string[] = [";
  for (const TypeSpec* t : types) manifest += "\n  " + string_literal(profile.type_name(t->words)) + ",";
  manifest += types.empty() ? "];\n" : "\n];\n";

  manifest +=
      "\n/** Decodes an instance of any generated type, chosen by its \"type\" member. */\n"
      "export function fromJson(text: string): Entity {\n"
      "  const object = parseObject(text);\n  switch (object[\"type\"]) {\n";
  for (const TypeSpec* t : types) {
    const std::string record = profile.type_name(t->words) + "Record";
    manifest += "    case " + record + ".CLASS_IRI:\n      return " + record + ".fromObject(object);\n";
  }
  manifest += "    default:\n      throw new UnknownType(\"no generated type for \" + String(object[\"type\"]));\n"
              "  }\n}\n";
  add_file(files, "index.ts", std::move(manifest));
  return files;
}

}  // namespace knowforge::emit::detail
