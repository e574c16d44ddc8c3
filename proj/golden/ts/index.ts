// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

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

import { AirportRecord } from "./airport";
import { AppointmentRecord } from "./appointment";
import { BirthdayRecord } from "./birthday";
import { CafeRecord } from "./cafe";
import { EventRecord } from "./event";
import { GroupRecord } from "./group";
import { HolidayRecord } from "./holiday";
import { HospitalRecord } from "./hospital";
import { HotelRecord } from "./hotel";
import { LandmarkRecord } from "./landmark";
import { MeetingRecord } from "./meeting";
import { OrganizationRecord } from "./organization";
import { PartyRecord } from "./party";
import { PersonRecord } from "./person";
import { PlaceRecord } from "./place";
import { PlaceOfWorshipRecord } from "./place-of-worship";
import { RestaurantRecord } from "./restaurant";

export type { Airport } from "./airport";
export type { Appointment } from "./appointment";
export type { Birthday } from "./birthday";
export type { Cafe } from "./cafe";
export type { Event } from "./event";
export type { Group } from "./group";
export type { Holiday } from "./holiday";
export type { Hospital } from "./hospital";
export type { Hotel } from "./hotel";
export type { Landmark } from "./landmark";
export type { Meeting } from "./meeting";
export type { Organization } from "./organization";
export type { Party } from "./party";
export type { Person } from "./person";
export type { Place } from "./place";
export type { PlaceOfWorship } from "./place-of-worship";
export type { Restaurant } from "./restaurant";

export {
  AirportRecord,
  AppointmentRecord,
  BirthdayRecord,
  CafeRecord,
  EventRecord,
  GroupRecord,
  HolidayRecord,
  HospitalRecord,
  HotelRecord,
  LandmarkRecord,
  MeetingRecord,
  OrganizationRecord,
  PartyRecord,
  PersonRecord,
  PlaceRecord,
  PlaceOfWorshipRecord,
  RestaurantRecord,
};

/** Generated type names, sorted. */
export const TYPE_NAMES: readonly string[] = [
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
];

/** Decodes an instance of any generated type, chosen by its "type" member. */
export function fromJson(text: string): Entity {
  const object = parseObject(text);
  switch (object["type"]) {
    case AirportRecord.CLASS_IRI:
      return AirportRecord.fromObject(object);
    case AppointmentRecord.CLASS_IRI:
      return AppointmentRecord.fromObject(object);
    case BirthdayRecord.CLASS_IRI:
      return BirthdayRecord.fromObject(object);
    case CafeRecord.CLASS_IRI:
      return CafeRecord.fromObject(object);
    case EventRecord.CLASS_IRI:
      return EventRecord.fromObject(object);
    case GroupRecord.CLASS_IRI:
      return GroupRecord.fromObject(object);
    case HolidayRecord.CLASS_IRI:
      return HolidayRecord.fromObject(object);
    case HospitalRecord.CLASS_IRI:
      return HospitalRecord.fromObject(object);
    case HotelRecord.CLASS_IRI:
      return HotelRecord.fromObject(object);
    case LandmarkRecord.CLASS_IRI:
      return LandmarkRecord.fromObject(object);
    case MeetingRecord.CLASS_IRI:
      return MeetingRecord.fromObject(object);
    case OrganizationRecord.CLASS_IRI:
      return OrganizationRecord.fromObject(object);
    case PartyRecord.CLASS_IRI:
      return PartyRecord.fromObject(object);
    case PersonRecord.CLASS_IRI:
      return PersonRecord.fromObject(object);
    case PlaceRecord.CLASS_IRI:
      return PlaceRecord.fromObject(object);
    case PlaceOfWorshipRecord.CLASS_IRI:
      return PlaceOfWorshipRecord.fromObject(object);
    case RestaurantRecord.CLASS_IRI:
      return RestaurantRecord.fromObject(object);
    default:
      throw new UnknownType("no generated type for " + String(object["type"]));
  }
}
