// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

/**
 * An organization such as a company, club, or institution.
 */
export interface Organization extends Entity {
}

/** Default implementation of Organization. */
export class OrganizationRecord implements Organization {
  static readonly CLASS_IRI = "https://know.dev/Organization";

  constructor(readonly id: string) {}

  classIri(): string {
    return OrganizationRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, OrganizationRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, OrganizationRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): OrganizationRecord {
    const record = new OrganizationRecord(readId(object, OrganizationRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, OrganizationRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
