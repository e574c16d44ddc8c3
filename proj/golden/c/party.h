/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_PARTY_H
#define KNOW_PARTY_H

#include "know.h"

#define KNOW_PARTY_IRI "https://know.dev/Party"

typedef struct Party {
  const char *id;
} Party;

#endif /* KNOW_PARTY_H */
