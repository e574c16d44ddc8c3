/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_CAFE_H
#define KNOW_CAFE_H

#include "know.h"

#define KNOW_CAFE_IRI "https://know.dev/Cafe"

typedef struct Cafe {
  const char *id;
} Cafe;

#endif /* KNOW_CAFE_H */
