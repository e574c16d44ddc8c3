// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

/**
 * A place. Not necessarily on the surface of the Earth.
 */
export interface Place extends Entity {
}

/** Default implementation of Place. */
export class PlaceRecord implements Place {
  static readonly CLASS_IRI = "https://know.dev/Place";

  constructor(readonly id: string) {}

  classIri(): string {
    return PlaceRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, PlaceRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, PlaceRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): PlaceRecord {
    const record = new PlaceRecord(readId(object, PlaceRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, PlaceRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
