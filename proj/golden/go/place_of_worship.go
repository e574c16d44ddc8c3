// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// PlaceOfWorshipIRI is the class IRI of PlaceOfWorship.
const PlaceOfWorshipIRI = "https://know.dev/PlaceOfWorship"

// PlaceOfWorship is a generated entity interface.
type PlaceOfWorship interface {
	Entity
}

// PlaceOfWorshipRecord is the default implementation of PlaceOfWorship.
type PlaceOfWorshipRecord struct {
	ID string
}

var _ PlaceOfWorship = (*PlaceOfWorshipRecord)(nil)

func (r *PlaceOfWorshipRecord) EntityID() string { return r.ID }
func (r *PlaceOfWorshipRecord) ClassIRI() string { return PlaceOfWorshipIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *PlaceOfWorshipRecord) ToJSON() string {
	w := newJSONWriter(r.ID, PlaceOfWorshipIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *PlaceOfWorshipRecord) ToTriples() string {
	w := newTripleWriter(r.ID, PlaceOfWorshipIRI)
	return w.finish()
}

// DecodePlaceOfWorship reads a PlaceOfWorship from the shared JSON shape.
func DecodePlaceOfWorship(data []byte) (*PlaceOfWorshipRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodePlaceOfWorship(object)
}

func decodePlaceOfWorship(object map[string]json.RawMessage) (*PlaceOfWorshipRecord, error) {
	id, err := readID(object, PlaceOfWorshipIRI)
	if err != nil {
		return nil, err
	}
	r := &PlaceOfWorshipRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, PlaceOfWorshipIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
