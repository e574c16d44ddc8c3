/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_APPOINTMENT_H
#define KNOW_APPOINTMENT_H

#include "know.h"

#define KNOW_APPOINTMENT_IRI "https://know.dev/Appointment"

typedef struct Appointment {
  const char *id;
} Appointment;

#endif /* KNOW_APPOINTMENT_H */
