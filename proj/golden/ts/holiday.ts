// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Holiday extends Entity {
}

/** Default implementation of Holiday. */
export class HolidayRecord implements Holiday {
  static readonly CLASS_IRI = "https://know.dev/Holiday";

  constructor(readonly id: string) {}

  classIri(): string {
    return HolidayRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, HolidayRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, HolidayRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): HolidayRecord {
    const record = new HolidayRecord(readId(object, HolidayRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, HolidayRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
