// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// HolidayIRI is the class IRI of Holiday.
const HolidayIRI = "https://know.dev/Holiday"

// Holiday is a generated entity interface.
type Holiday interface {
	Entity
}

// HolidayRecord is the default implementation of Holiday.
type HolidayRecord struct {
	ID string
}

var _ Holiday = (*HolidayRecord)(nil)

func (r *HolidayRecord) EntityID() string { return r.ID }
func (r *HolidayRecord) ClassIRI() string { return HolidayIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *HolidayRecord) ToJSON() string {
	w := newJSONWriter(r.ID, HolidayIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *HolidayRecord) ToTriples() string {
	w := newTripleWriter(r.ID, HolidayIRI)
	return w.finish()
}

// DecodeHoliday reads a Holiday from the shared JSON shape.
func DecodeHoliday(data []byte) (*HolidayRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeHoliday(object)
}

func decodeHoliday(object map[string]json.RawMessage) (*HolidayRecord, error) {
	id, err := readID(object, HolidayIRI)
	if err != nil {
		return nil, err
	}
	r := &HolidayRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, HolidayIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
