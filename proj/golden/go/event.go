// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// EventIRI is the class IRI of Event.
const EventIRI = "https://know.dev/Event"

// Event: Something that happens at a given time and place.
type Event interface {
	Entity
}

// EventRecord is the default implementation of Event.
type EventRecord struct {
	ID string
}

var _ Event = (*EventRecord)(nil)

func (r *EventRecord) EntityID() string { return r.ID }
func (r *EventRecord) ClassIRI() string { return EventIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *EventRecord) ToJSON() string {
	w := newJSONWriter(r.ID, EventIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *EventRecord) ToTriples() string {
	w := newTripleWriter(r.ID, EventIRI)
	return w.finish()
}

// DecodeEvent reads a Event from the shared JSON shape.
func DecodeEvent(data []byte) (*EventRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeEvent(object)
}

func decodeEvent(object map[string]json.RawMessage) (*EventRecord, error) {
	id, err := readID(object, EventIRI)
	if err != nil {
		return nil, err
	}
	r := &EventRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, EventIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
