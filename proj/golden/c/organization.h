/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_ORGANIZATION_H
#define KNOW_ORGANIZATION_H

#include "know.h"

#define KNOW_ORGANIZATION_IRI "https://know.dev/Organization"

/*
 * An organization such as a company, club, or institution.
 */
typedef struct Organization {
  const char *id;
} Organization;

#endif /* KNOW_ORGANIZATION_H */
