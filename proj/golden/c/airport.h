/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_AIRPORT_H
#define KNOW_AIRPORT_H

#include "know.h"

#define KNOW_AIRPORT_IRI "https://know.dev/Airport"

typedef struct Airport {
  const char *id;
} Airport;

#endif /* KNOW_AIRPORT_H */
