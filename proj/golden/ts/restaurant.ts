// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Restaurant extends Entity {
}

/** Default implementation of Restaurant. */
export class RestaurantRecord implements Restaurant {
  static readonly CLASS_IRI = "https://know.dev/Restaurant";

  constructor(readonly id: string) {}

  classIri(): string {
    return RestaurantRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, RestaurantRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, RestaurantRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): RestaurantRecord {
    const record = new RestaurantRecord(readId(object, RestaurantRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, RestaurantRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
