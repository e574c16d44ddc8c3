// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// AppointmentIRI is the class IRI of Appointment.
const AppointmentIRI = "https://know.dev/Appointment"

// Appointment is a generated entity interface.
type Appointment interface {
	Entity
}

// AppointmentRecord is the default implementation of Appointment.
type AppointmentRecord struct {
	ID string
}

var _ Appointment = (*AppointmentRecord)(nil)

func (r *AppointmentRecord) EntityID() string { return r.ID }
func (r *AppointmentRecord) ClassIRI() string { return AppointmentIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *AppointmentRecord) ToJSON() string {
	w := newJSONWriter(r.ID, AppointmentIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *AppointmentRecord) ToTriples() string {
	w := newTripleWriter(r.ID, AppointmentIRI)
	return w.finish()
}

// DecodeAppointment reads a Appointment from the shared JSON shape.
func DecodeAppointment(data []byte) (*AppointmentRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeAppointment(object)
}

func decodeAppointment(object map[string]json.RawMessage) (*AppointmentRecord, error) {
	id, err := readID(object, AppointmentIRI)
	if err != nil {
		return nil, err
	}
	r := &AppointmentRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, AppointmentIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
