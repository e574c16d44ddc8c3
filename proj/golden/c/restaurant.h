/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_RESTAURANT_H
#define KNOW_RESTAURANT_H

#include "know.h"

#define KNOW_RESTAURANT_IRI "https://know.dev/Restaurant"

typedef struct Restaurant {
  const char *id;
} Restaurant;

#endif /* KNOW_RESTAURANT_H */
