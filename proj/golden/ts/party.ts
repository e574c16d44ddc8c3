// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Party extends Entity {
}

/** Default implementation of Party. */
export class PartyRecord implements Party {
  static readonly CLASS_IRI = "https://know.dev/Party";

  constructor(readonly id: string) {}

  classIri(): string {
    return PartyRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, PartyRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, PartyRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): PartyRecord {
    const record = new PartyRecord(readId(object, PartyRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, PartyRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
