/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_PLACE_OF_WORSHIP_H
#define KNOW_PLACE_OF_WORSHIP_H

#include "know.h"

#define KNOW_PLACE_OF_WORSHIP_IRI "https://know.dev/PlaceOfWorship"

typedef struct PlaceOfWorship {
  const char *id;
} PlaceOfWorship;

#endif /* KNOW_PLACE_OF_WORSHIP_H */
