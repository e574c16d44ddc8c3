// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// BirthdayIRI is the class IRI of Birthday.
const BirthdayIRI = "https://know.dev/Birthday"

// Birthday is a generated entity interface.
type Birthday interface {
	Entity
}

// BirthdayRecord is the default implementation of Birthday.
type BirthdayRecord struct {
	ID string
}

var _ Birthday = (*BirthdayRecord)(nil)

func (r *BirthdayRecord) EntityID() string { return r.ID }
func (r *BirthdayRecord) ClassIRI() string { return BirthdayIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *BirthdayRecord) ToJSON() string {
	w := newJSONWriter(r.ID, BirthdayIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *BirthdayRecord) ToTriples() string {
	w := newTripleWriter(r.ID, BirthdayIRI)
	return w.finish()
}

// DecodeBirthday reads a Birthday from the shared JSON shape.
func DecodeBirthday(data []byte) (*BirthdayRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeBirthday(object)
}

func decodeBirthday(object map[string]json.RawMessage) (*BirthdayRecord, error) {
	id, err := readID(object, BirthdayIRI)
	if err != nil {
		return nil, err
	}
	r := &BirthdayRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, BirthdayIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
