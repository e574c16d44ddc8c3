// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// MeetingIRI is the class IRI of Meeting.
const MeetingIRI = "https://know.dev/Meeting"

// Meeting is a generated entity interface.
type Meeting interface {
	Entity
}

// MeetingRecord is the default implementation of Meeting.
type MeetingRecord struct {
	ID string
}

var _ Meeting = (*MeetingRecord)(nil)

func (r *MeetingRecord) EntityID() string { return r.ID }
func (r *MeetingRecord) ClassIRI() string { return MeetingIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *MeetingRecord) ToJSON() string {
	w := newJSONWriter(r.ID, MeetingIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *MeetingRecord) ToTriples() string {
	w := newTripleWriter(r.ID, MeetingIRI)
	return w.finish()
}

// DecodeMeeting reads a Meeting from the shared JSON shape.
func DecodeMeeting(data []byte) (*MeetingRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeMeeting(object)
}

func decodeMeeting(object map[string]json.RawMessage) (*MeetingRecord, error) {
	id, err := readID(object, MeetingIRI)
	if err != nil {
		return nil, err
	}
	r := &MeetingRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, MeetingIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
