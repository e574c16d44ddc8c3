// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// RestaurantIRI is the class IRI of Restaurant.
const RestaurantIRI = "https://know.dev/Restaurant"

// Restaurant is a generated entity interface.
type Restaurant interface {
	Entity
}

// RestaurantRecord is the default implementation of Restaurant.
type RestaurantRecord struct {
	ID string
}

var _ Restaurant = (*RestaurantRecord)(nil)

func (r *RestaurantRecord) EntityID() string { return r.ID }
func (r *RestaurantRecord) ClassIRI() string { return RestaurantIRI }

// ToJSON encodes the record in the shared JSON shape.
func (r *RestaurantRecord) ToJSON() string {
	w := newJSONWriter(r.ID, RestaurantIRI)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *RestaurantRecord) ToTriples() string {
	w := newTripleWriter(r.ID, RestaurantIRI)
	return w.finish()
}

// DecodeRestaurant reads a Restaurant from the shared JSON shape.
func DecodeRestaurant(data []byte) (*RestaurantRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodeRestaurant(object)
}

func decodeRestaurant(object map[string]json.RawMessage) (*RestaurantRecord, error) {
	id, err := readID(object, RestaurantIRI)
	if err != nil {
		return nil, err
	}
	r := &RestaurantRecord{ID: id}
	for key := range object {
		switch key {
		case "id", "type":
		default:
			err = unknownMember(key, RestaurantIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
