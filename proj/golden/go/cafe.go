// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// CafeIRI is the class IRI of Cafe.
const CafeIRI = "https://know.dev/Cafe"

// Cafe is a generated entity interface.
type Cafe interface {
	Entity
}

// CafeRecord is the default implementation of Cafe.
type CafeRecord struct {
	ID string
}

var _ Cafe = (*CafeRecord)(nil)

func (r *CafeRecord) EntityID() string { return r.ID }
func (r *CafeRecord) ClassIRI() string { return CafeIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *CafeRecord) ToJSON() string {
	w := newJSONWriter(r.ID, CafeIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *CafeRecord) ToTriples() string {
	w := newTripleWriter(r.ID, CafeIRI)
	return w.finish()
}

// DecodeCafe reads a Cafe from the shared JSON shape.
func DecodeCafe(data []byte) (*CafeRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeCafe(object)
}

func decodeCafe(object map[string]json.RawMessage) (*CafeRecord, error) {
	id, err := readID(object, CafeIRI)
	if err != nil {
		return nil, err
	}
	r := &CafeRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, CafeIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
