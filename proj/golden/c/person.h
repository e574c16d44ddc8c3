/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_PERSON_H
#define KNOW_PERSON_H

#include "know.h"

#define KNOW_PERSON_IRI "https://know.dev/Person"

/*
 * A person, real or fictional.
 */
typedef struct Person {
  const char *id;
  struct { bool present; int64_t value; } age;
  struct { size_t count; const char **items; } aunt;
  struct { size_t count; const char **items; } brother;
  struct { size_t count; const char **items; } child;
  struct { bool present; const char *value; } father;
  struct { bool present; const char *value; } mother;
  struct { bool present; const char *value; } name;
  struct { size_t count; const char **items; } nephew;
  struct { size_t count; const char **items; } niece;
  struct { size_t count; const char **items; } parent;
  struct { size_t count; const char **items; } sibling;
  struct { size_t count; const char **items; } sister;
  struct { size_t count; const char **items; } uncle;
} Person;

#endif /* KNOW_PERSON_H */
