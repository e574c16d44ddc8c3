// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// OrganizationIRI is the class IRI of Organization.
const OrganizationIRI = "https://know.dev/Organization"

// Organization: An organization such as a company, club, or institution.
type Organization interface {
	Entity
}

// OrganizationRecord is the default implementation of Organization.
type OrganizationRecord struct {
	ID string
}

var _ Organization = (*OrganizationRecord)(nil)

func (r *OrganizationRecord) EntityID() string { return r.ID }
func (r *OrganizationRecord) ClassIRI() string { return OrganizationIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *OrganizationRecord) ToJSON() string {
	w := newJSONWriter(r.ID, OrganizationIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *OrganizationRecord) ToTriples() string {
	w := newTripleWriter(r.ID, OrganizationIRI)
	return w.finish()
}

// DecodeOrganization reads a Organization from the shared JSON shape.
func DecodeOrganization(data []byte) (*OrganizationRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeOrganization(object)
}

func decodeOrganization(object map[string]json.RawMessage) (*OrganizationRecord, error) {
	id, err := readID(object, OrganizationIRI)
	if err != nil {
		return nil, err
	}
	r := &OrganizationRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, OrganizationIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
