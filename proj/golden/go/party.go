// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// PartyIRI is the class IRI of Party.
const PartyIRI = "https://know.dev/Party"

// Party is a generated entity interface.
type Party interface {
	Entity
}

// PartyRecord is the default implementation of Party.
type PartyRecord struct {
	ID string
}

var _ Party = (*PartyRecord)(nil)

func (r *PartyRecord) EntityID() string { return r.ID }
func (r *PartyRecord) ClassIRI() string { return PartyIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *PartyRecord) ToJSON() string {
	w := newJSONWriter(r.ID, PartyIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *PartyRecord) ToTriples() string {
	w := newTripleWriter(r.ID, PartyIRI)
	return w.finish()
}

// DecodeParty reads a Party from the shared JSON shape.
func DecodeParty(data []byte) (*PartyRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeParty(object)
}

func decodeParty(object map[string]json.RawMessage) (*PartyRecord, error) {
	id, err := readID(object, PartyIRI)
	if err != nil {
		return nil, err
	}
	r := &PartyRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, PartyIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
