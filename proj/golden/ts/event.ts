// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

/**
 * Something that happens at a given time and place.
 */
export interface Event extends Entity {
}

/** Default implementation of Event. */
export class EventRecord implements Event {
  static readonly CLASS_IRI = "https://know.dev/Event";

  constructor(readonly id: string) {}

  classIri(): string {
    return EventRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, EventRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, EventRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): EventRecord {
    const record = new EventRecord(readId(object, EventRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, EventRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
