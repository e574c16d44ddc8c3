/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_HOLIDAY_H
#define KNOW_HOLIDAY_H

#include "know.h"

#define KNOW_HOLIDAY_IRI "https://know.dev/Holiday"

typedef struct Holiday {
  const char *id;
} Holiday;

#endif /* KNOW_HOLIDAY_H */
