// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// GroupIRI is the class IRI of Group.
const GroupIRI = "https://know.dev/Group"

// Group: A group of people.
type Group interface {
	Entity
}

// GroupRecord is the default implementation of Group.
type GroupRecord struct {
	ID string
}

var _ Group = (*GroupRecord)(nil)

func (r *GroupRecord) EntityID() string { return r.ID }
func (r *GroupRecord) ClassIRI() string { return GroupIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *GroupRecord) ToJSON() string {
	w := newJSONWriter(r.ID, GroupIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *GroupRecord) ToTriples() string {
	w := newTripleWriter(r.ID, GroupIRI)
	return w.finish()
}

// DecodeGroup reads a Group from the shared JSON shape.
func DecodeGroup(data []byte) (*GroupRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeGroup(object)
}

func decodeGroup(object map[string]json.RawMessage) (*GroupRecord, error) {
	id, err := readID(object, GroupIRI)
	if err != nil {
		return nil, err
	}
	r := &GroupRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, GroupIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
