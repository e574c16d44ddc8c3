/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_HOTEL_H
#define KNOW_HOTEL_H

#include "know.h"

#define KNOW_HOTEL_IRI "https://know.dev/Hotel"

typedef struct Hotel {
  const char *id;
} Hotel;

#endif /* KNOW_HOTEL_H */
