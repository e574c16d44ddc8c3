// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, readMany, readSingle, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

/**
 * A person, real or fictional.
 */
export interface Person extends Entity {
  age: number | null;
  aunt: string[];
  brother: string[];
  child: string[];
  father: string | null;
  mother: string | null;
  name: string | null;
  nephew: string[];
  niece: string[];
  parent: string[];
  sibling: string[];
  sister: string[];
  uncle: string[];
}

/** Default implementation of Person. */
export class PersonRecord implements Person {
  static readonly CLASS_IRI = "https://know.dev/Person";

  age: number | null = null;
  aunt: string[] = [];
  brother: string[] = [];
  child: string[] = [];
  father: string | null = null;
  mother: string | null = null;
  name: string | null = null;
  nephew: string[] = [];
  niece: string[] = [];
  parent: string[] = [];
  sibling: string[] = [];
  sister: string[] = [];
  uncle: string[] = [];

  constructor(readonly id: string) {}

  classIri(): string {
    return PersonRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, PersonRecord.CLASS_IRI);
    w.single("age", this.age, "integer");
    w.many("aunt", this.aunt, "ref");
    w.many("brother", this.brother, "ref");
    w.many("child", this.child, "ref");
    w.single("father", this.father, "ref");
    w.single("mother", this.mother, "ref");
    w.single("name", this.name, "text");
    w.many("nephew", this.nephew, "ref");
    w.many("niece", this.niece, "ref");
    w.many("parent", this.parent, "ref");
    w.many("sibling", this.sibling, "ref");
    w.many("sister", this.sister, "ref");
    w.many("uncle", this.uncle, "ref");
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, PersonRecord.CLASS_IRI);
    w.single("https://know.dev/age", this.age, "integer");
    w.many("https://know.dev/aunt", this.aunt, "ref");
    w.many("https://know.dev/brother", this.brother, "ref");
    w.many("https://know.dev/child", this.child, "ref");
    w.single("https://know.dev/father", this.father, "ref");
    w.single("https://know.dev/mother", this.mother, "ref");
    w.single("https://know.dev/name", this.name, "text");
    w.many("https://know.dev/nephew", this.nephew, "ref");
    w.many("https://know.dev/niece", this.niece, "ref");
    w.many("https://know.dev/parent", this.parent, "ref");
    w.many("https://know.dev/sibling", this.sibling, "ref");
    w.many("https://know.dev/sister", this.sister, "ref");
    w.many("https://know.dev/uncle", this.uncle, "ref");
    return w.finish();
  }

  static fromObject(object: JsonObject): PersonRecord {
    const record = new PersonRecord(readId(object, PersonRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        case "age":
          record.age = readSingle(value, key, "integer") as number | null;
          break;
        case "aunt":
          record.aunt = readMany(value, key, "ref") as string[];
          break;
        case "brother":
          record.brother = readMany(value, key, "ref") as string[];
          break;
        case "child":
          record.child = readMany(value, key, "ref") as string[];
          break;
        case "father":
          record.father = readSingle(value, key, "ref") as string | null;
          break;
        case "mother":
          record.mother = readSingle(value, key, "ref") as string | null;
          break;
        case "name":
          record.name = readSingle(value, key, "text") as string | null;
          break;
        case "nephew":
          record.nephew = readMany(value, key, "ref") as string[];
          break;
        case "niece":
          record.niece = readMany(value, key, "ref") as string[];
          break;
        case "parent":
          record.parent = readMany(value, key, "ref") as string[];
          break;
        case "sibling":
          record.sibling = readMany(value, key, "ref") as string[];
          break;
        case "sister":
          record.sister = readMany(value, key, "ref") as string[];
          break;
        case "uncle":
          record.uncle = readMany(value, key, "ref") as string[];
          break;
        default:
          unknownMember(key, PersonRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
