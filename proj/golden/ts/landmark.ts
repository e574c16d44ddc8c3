// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Landmark extends Entity {
}

/** Default implementation of Landmark. */
export class LandmarkRecord implements Landmark {
  static readonly CLASS_IRI = "https://know.dev/Landmark";

  constructor(readonly id: string) {}

  classIri(): string {
    return LandmarkRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, LandmarkRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, LandmarkRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): LandmarkRecord {
    const record = new LandmarkRecord(readId(object, LandmarkRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, LandmarkRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
