// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Airport extends Entity {
}

/** Default implementation of Airport. */
export class AirportRecord implements Airport {
  static readonly CLASS_IRI = "https://know.dev/Airport";

  constructor(readonly id: string) {}

  classIri(): string {
    return AirportRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, AirportRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, AirportRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): AirportRecord {
    const record = new AirportRecord(readId(object, AirportRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, AirportRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
