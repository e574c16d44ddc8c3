// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Birthday extends Entity {
}

/** Default implementation of Birthday. */
export class BirthdayRecord implements Birthday {
  static readonly CLASS_IRI = "https://know.dev/Birthday";

  constructor(readonly id: string) {}

  classIri(): string {
    return BirthdayRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, BirthdayRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, BirthdayRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): BirthdayRecord {
    const record = new BirthdayRecord(readId(object, BirthdayRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, BirthdayRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
