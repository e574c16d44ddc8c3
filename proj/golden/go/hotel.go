// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// HotelIRI is the class IRI of Hotel.
const HotelIRI = "https://know.dev/Hotel"

// Hotel is a generated entity interface.
type Hotel interface {
	Entity
}

// HotelRecord is the default implementation of Hotel.
type HotelRecord struct {
	ID string
}

var _ Hotel = (*HotelRecord)(nil)

func (r *HotelRecord) EntityID() string { return r.ID }
func (r *HotelRecord) ClassIRI() string { return HotelIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *HotelRecord) ToJSON() string {
	w := newJSONWriter(r.ID, HotelIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *HotelRecord) ToTriples() string {
	w := newTripleWriter(r.ID, HotelIRI)
	return w.finish()
}

// DecodeHotel reads a Hotel from the shared JSON shape.
func DecodeHotel(data []byte) (*HotelRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeHotel(object)
}

func decodeHotel(object map[string]json.RawMessage) (*HotelRecord, error) {
	id, err := readID(object, HotelIRI)
	if err != nil {
		return nil, err
	}
	r := &HotelRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, HotelIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
