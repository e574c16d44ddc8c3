/* Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
 * SPDX-License-Identifier: Unlicense */

#ifndef KNOW_H
#define KNOW_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#include "airport.h"
#include "appointment.h"
#include "birthday.h"
#include "cafe.h"
#include "event.h"
#include "group.h"
#include "holiday.h"
#include "hospital.h"
#include "hotel.h"
#include "landmark.h"
#include "meeting.h"
#include "organization.h"
#include "party.h"
#include "person.h"
#include "place.h"
#include "place_of_worship.h"
#include "restaurant.h"

#define KNOW_TYPE_COUNT 17

/* Type names, sorted. */
#define KNOW_TYPE_NAMES \
  "Airport", \
  "Appointment", \
  "Birthday", \
  "Cafe", \
  "Event", \
  "Group", \
  "Holiday", \
  "Hospital", \
  "Hotel", \
  "Landmark", \
  "Meeting", \
  "Organization", \
  "Party", \
  "Person", \
  "Place", \
  "PlaceOfWorship", \
  "Restaurant",

#endif /* KNOW_H */
