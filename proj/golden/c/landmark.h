/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_LANDMARK_H
#define KNOW_LANDMARK_H

#include "know.h"

#define KNOW_LANDMARK_IRI "https://know.dev/Landmark"

typedef struct Landmark {
  const char *id;
} Landmark;

#endif /* KNOW_LANDMARK_H */
