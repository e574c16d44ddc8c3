/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_EVENT_H
#define KNOW_EVENT_H

#include "know.h"

#define KNOW_EVENT_IRI "https://know.dev/Event"

/*
 * Something that happens at a given time and place.
 */
typedef struct Event {
  const char *id;
} Event;

#endif /* KNOW_EVENT_H */
