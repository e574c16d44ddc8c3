// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// HospitalIRI is the class IRI of Hospital.
const HospitalIRI = "https://know.dev/Hospital"

// Hospital is a generated entity interface.
type Hospital interface {
	Entity
}

// HospitalRecord is the default implementation of Hospital.
type HospitalRecord struct {
	ID string
}

var _ Hospital = (*HospitalRecord)(nil)

func (r *HospitalRecord) EntityID() string { return r.ID }
func (r *HospitalRecord) ClassIRI() string { return HospitalIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *HospitalRecord) ToJSON() string {
	w := newJSONWriter(r.ID, HospitalIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *HospitalRecord) ToTriples() string {
	w := newTripleWriter(r.ID, HospitalIRI)
	return w.finish()
}

// DecodeHospital reads a Hospital from the shared JSON shape.
func DecodeHospital(data []byte) (*HospitalRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeHospital(object)
}

func decodeHospital(object map[string]json.RawMessage) (*HospitalRecord, error) {
	id, err := readID(object, HospitalIRI)
	if err != nil {
		return nil, err
	}
	r := &HospitalRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, HospitalIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
