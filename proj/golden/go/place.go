// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// PlaceIRI is the class IRI of Place.
const PlaceIRI = "https://know.dev/Place"

// Place: A place. Not necessarily on the surface of the Earth.
type Place interface {
	Entity
}

// PlaceRecord is the default implementation of Place.
type PlaceRecord struct {
	ID string
}

var _ Place = (*PlaceRecord)(nil)

func (r *PlaceRecord) EntityID() string { return r.ID }
func (r *PlaceRecord) ClassIRI() string { return PlaceIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *PlaceRecord) ToJSON() string {
	w := newJSONWriter(r.ID, PlaceIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *PlaceRecord) ToTriples() string {
	w := newTripleWriter(r.ID, PlaceIRI)
	return w.finish()
}

// DecodePlace reads a Place from the shared JSON shape.
func DecodePlace(data []byte) (*PlaceRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodePlace(object)
}

func decodePlace(object map[string]json.RawMessage) (*PlaceRecord, error) {
	id, err := readID(object, PlaceIRI)
	if err != nil {
		return nil, err
	}
	r := &PlaceRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, PlaceIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
