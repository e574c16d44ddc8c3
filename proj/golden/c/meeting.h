/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_MEETING_H
#define KNOW_MEETING_H

#include "know.h"

#define KNOW_MEETING_IRI "https://know.dev/Meeting"

typedef struct Meeting {
  const char *id;
} Meeting;

#endif /* KNOW_MEETING_H */
