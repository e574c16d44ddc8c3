// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Meeting extends Entity {
}

/** Default implementation of Meeting. */
export class MeetingRecord implements Meeting {
  static readonly CLASS_IRI = "https://know.dev/Meeting";

  constructor(readonly id: string) {}

  classIri(): string {
    return MeetingRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, MeetingRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, MeetingRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): MeetingRecord {
    const record = new MeetingRecord(readId(object, MeetingRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, MeetingRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
