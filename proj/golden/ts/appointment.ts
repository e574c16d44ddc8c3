// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

import { JsonWriter, TripleWriter, readId, unknownMember } from "./index";
import type { Entity, JsonObject } from "./index";

export interface Appointment extends Entity {
}

/** Default implementation of Appointment. */
export class AppointmentRecord implements Appointment {
  static readonly CLASS_IRI = "https://know.dev/Appointment";

  constructor(readonly id: string) {}

  classIri(): string {
    return AppointmentRecord.CLASS_IRI;
  }

  toJson(): string {
    const w = new JsonWriter(this.id, AppointmentRecord.CLASS_IRI);
    return w.finish();
  }

  toTriples(): string {
    const w = new TripleWriter(this.id, AppointmentRecord.CLASS_IRI);
    return w.finish();
  }

  static fromObject(object: JsonObject): AppointmentRecord {
    const record = new AppointmentRecord(readId(object, AppointmentRecord.CLASS_IRI));
    for (const [key, value] of Object.entries(object)) {
      switch (key) {
        case "id":
        case "type":
          break;
        default:
          unknownMember(key, AppointmentRecord.CLASS_IRI);
      }
    }
    return record;
  }
}
