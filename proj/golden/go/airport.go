// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// AirportIRI is the class IRI of Airport.
const AirportIRI = "https://know.dev/Airport"

// Airport is a generated entity interface.
type Airport interface {
	Entity
}

// AirportRecord is the default implementation of Airport.
type AirportRecord struct {
	ID string
}

var _ Airport = (*AirportRecord)(nil)

func (r *AirportRecord) EntityID() string { return r.ID }
func (r *AirportRecord) ClassIRI() string { return AirportIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *AirportRecord) ToJSON() string {
	w := newJSONWriter(r.ID, AirportIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *AirportRecord) ToTriples() string {
	w := newTripleWriter(r.ID, AirportIRI)
	return w.finish()
}

// DecodeAirport reads a Airport from the shared JSON shape.
func DecodeAirport(data []byte) (*AirportRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeAirport(object)
}

func decodeAirport(object map[string]json.RawMessage) (*AirportRecord, error) {
	id, err := readID(object, AirportIRI)
	if err != nil {
		return nil, err
	}
	r := &AirportRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, AirportIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
