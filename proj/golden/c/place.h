/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_PLACE_H
#define KNOW_PLACE_H

#include "know.h"

#define KNOW_PLACE_IRI "https://know.dev/Place"

/*
 * A place. Not necessarily on the surface of the Earth.
 */
typedef struct Place {
  const char *id;
} Place;

#endif /* KNOW_PLACE_H */
