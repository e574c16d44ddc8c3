// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// LandmarkIRI is the class IRI of Landmark.
const LandmarkIRI = "https://know.dev/Landmark"

// Landmark is a generated entity interface.
type Landmark interface {
	Entity
}

// LandmarkRecord is the default implementation of Landmark.
type LandmarkRecord struct {
	ID string
}

var _ Landmark = (*LandmarkRecord)(nil)

func (r *LandmarkRecord) EntityID() string { return r.ID }
func (r *LandmarkRecord) ClassIRI() string { return LandmarkIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *LandmarkRecord) ToJSON() string {
	w := newJSONWriter(r.ID, LandmarkIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *LandmarkRecord) ToTriples() string {
	w := newTripleWriter(r.ID, LandmarkIRI)
	return w.finish()
}

// DecodeLandmark reads a Landmark from the shared JSON shape.
func DecodeLandmark(data []byte) (*LandmarkRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeLandmark(object)
}

func decodeLandmark(object map[string]json.RawMessage) (*LandmarkRecord, error) {
	id, err := readID(object, LandmarkIRI)
	if err != nil {
		return nil, err
	}
	r := &LandmarkRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, LandmarkIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
