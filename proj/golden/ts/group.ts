// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

/**
 * A group of people.
 */
export interface Group extends Entity {
}

/** Default implementation of Group. */
export class GroupRecord implements Group {
  static readonly CLASS_IRI = "https://know.dev/Group";

  constructor(readonly id: string) {}

  classIri(): string {
    return GroupRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, GroupRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, GroupRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): GroupRecord {
    const record = new GroupRecord(readId(object, GroupRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, GroupRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
