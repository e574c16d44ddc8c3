// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface PlaceOfWorship extends Entity {
}

/** Default implementation of PlaceOfWorship. */
export class PlaceOfWorshipRecord implements PlaceOfWorship {
  static readonly CLASS_IRI = "https://know.dev/PlaceOfWorship";

  constructor(readonly id: string) {}

  classIri(): string {
    return PlaceOfWorshipRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, PlaceOfWorshipRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, PlaceOfWorshipRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): PlaceOfWorshipRecord {
    const record = new PlaceOfWorshipRecord(readId(object, PlaceOfWorshipRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, PlaceOfWorshipRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
