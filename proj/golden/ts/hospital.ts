// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Hospital extends Entity {
}

/** Default implementation of Hospital. */
export class HospitalRecord implements Hospital {
  static readonly CLASS_IRI = "https://know.dev/Hospital";

  constructor(readonly id: string) {}

  classIri(): string {
    return HospitalRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, HospitalRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, HospitalRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): HospitalRecord {
    const record = new HospitalRecord(readId(object, HospitalRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, HospitalRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
