// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Cafe extends Entity {
}

/** Default implementation of Cafe. */
export class CafeRecord implements Cafe {
  static readonly CLASS_IRI = "https://know.dev/Cafe";

  constructor(readonly id: string) {}

  classIri(): string {
    return CafeRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, CafeRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, CafeRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): CafeRecord {
    const record = new CafeRecord(readId(object, CafeRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, CafeRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
