/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_GROUP_H
#define KNOW_GROUP_H

#include "know.h"

#define KNOW_GROUP_IRI "https://know.dev/Group"

/*
 * A group of people.
 */
typedef struct Group {
  const char *id;
} Group;

#endif /* KNOW_GROUP_H */
