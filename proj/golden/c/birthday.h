/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_BIRTHDAY_H
#define KNOW_BIRTHDAY_H

#include "know.h"

#define KNOW_BIRTHDAY_IRI "https://know.dev/Birthday"

typedef struct Birthday {
  const char *id;
} Birthday;

#endif /* KNOW_BIRTHDAY_H */
