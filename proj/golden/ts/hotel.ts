// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Hotel extends Entity {
}

/** Default implementation of Hotel. */
export class HotelRecord implements Hotel {
  static readonly CLASS_IRI = "https://know.dev/Hotel";

  constructor(readonly id: string) {}

  classIri(): string {
    return HotelRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, HotelRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, HotelRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): HotelRecord {
    const record = new HotelRecord(readId(object, HotelRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, HotelRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
