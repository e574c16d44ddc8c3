/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_HOSPITAL_H
#define KNOW_HOSPITAL_H

#include "know.h"

#define KNOW_HOSPITAL_IRI "https://know.dev/Hospital"

typedef struct Hospital {
  const char *id;
} Hospital;

#endif /* KNOW_HOSPITAL_H */
