// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

package know

import "encoding/json"

// PersonIRI is the class IRI of Person.
const PersonIRI = "https://know.dev/Person"

// Person: A person, real or fictional.
type Person interface {
	Entity
	GetAge() *int64
	GetAunt() []string
	GetBrother() []string
	GetChild() []string
	GetFather() *string
	GetMother() *string
	GetName() *string
	GetNephew() []string
	GetNiece() []string
	GetParent() []string
	GetSibling() []string
	GetSister() []string
	GetUncle() []string
}

// PersonRecord is the default implementation of Person.
type PersonRecord struct {
	ID      string
	Age     *int64
	Aunt    []string
	Brother []string
	Child   []string
	Father  *string
	Mother  *string
	Name    *string
	Nephew  []string
	Niece   []string
	Parent  []string
	Sibling []string
	Sister  []string
	Uncle   []string
}

var _ Person = (*PersonRecord)(nil)

func (r *PersonRecord) EntityID() string { return r.ID }
func (r *PersonRecord) ClassIRI() string { return PersonIRI }
func (r *PersonRecord) GetAge() *int64 { return r.Age }
func (r *PersonRecord) GetAunt() []string { return r.Aunt }
func (r *PersonRecord) GetBrother() []string { return r.Brother }
func (r *PersonRecord) GetChild() []string { return r.Child }
func (r *PersonRecord) GetFather() *string { return r.Father }
func (r *PersonRecord) GetMother() *string { return r.Mother }
func (r *PersonRecord) GetName() *string { return r.Name }
func (r *PersonRecord) GetNephew() []string { return r.Nephew }
func (r *PersonRecord) GetNiece() []string { return r.Niece }
func (r *PersonRecord) GetParent() []string { return r.Parent }
func (r *PersonRecord) GetSibling() []string { return r.Sibling }
func (r *PersonRecord) GetSister() []string { return r.Sister }
func (r *PersonRecord) GetUncle() []string { return r.Uncle }

// ToJSON encodes the record in the shared JSON shape.
func (r *PersonRecord) ToJSON() string {
	w := newJSONWriter(r.ID, PersonIRI)
	writeSingle(w, "age", r.Age)
	writeMany(w, "aunt", r.Aunt)
	writeMany(w, "brother", r.Brother)
	writeMany(w, "child", r.Child)
	writeSingle(w, "father", r.Father)
	writeSingle(w, "mother", r.Mother)
	writeSingle(w, "name", r.Name)
	writeMany(w, "nephew", r.Nephew)
	writeMany(w, "niece", r.Niece)
	writeMany(w, "parent", r.Parent)
	writeMany(w, "sibling", r.Sibling)
	writeMany(w, "sister", r.Sister)
	writeMany(w, "uncle", r.Uncle)
	return w.finish()
}

// ToTriples exports the record as canonical N-Triples.
func (r *PersonRecord) ToTriples() string {
	w := newTripleWriter(r.ID, PersonIRI)
	literalSingle(w, "https://know.dev/age", r.Age, "http://www.w3.org/2001/XMLSchema#integer")
	referenceMany(w, "https://know.dev/aunt", r.Aunt)
	referenceMany(w, "https://know.dev/brother", r.Brother)
	referenceMany(w, "https://know.dev/child", r.Child)
	referenceSingle(w, "https://know.dev/father", r.Father)
	referenceSingle(w, "https://know.dev/mother", r.Mother)
	literalSingle(w, "https://know.dev/name", r.Name, "http://www.w3.org/2001/XMLSchema#string")
	referenceMany(w, "https://know.dev/nephew", r.Nephew)
	referenceMany(w, "https://know.dev/niece", r.Niece)
	referenceMany(w, "https://know.dev/parent", r.Parent)
	referenceMany(w, "https://know.dev/sibling", r.Sibling)
	referenceMany(w, "https://know.dev/sister", r.Sister)
	referenceMany(w, "https://know.dev/uncle", r.Uncle)
	return w.finish()
}

// DecodePerson reads a Person from the shared JSON shape.
func DecodePerson(data []byte) (*PersonRecord, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	return decodePerson(object)
}

func decodePerson(object map[string]json.RawMessage) (*PersonRecord, error) {
	id, err := readID(object, PersonIRI)
	if err != nil {
		return nil, err
	}
	r := &PersonRecord{ID: id}
	for key, raw := range object {
		switch key {
		case "id", "type":
		case "age":
			r.Age, err = readSingle[int64](raw, key)
		case "aunt":
			r.Aunt, err = readMany[string](raw, key)
		case "brother":
			r.Brother, err = readMany[string](raw, key)
		case "child":
			r.Child, err = readMany[string](raw, key)
		case "father":
			r.Father, err = readSingle[string](raw, key)
		case "mother":
			r.Mother, err = readSingle[string](raw, key)
		case "name":
			r.Name, err = readSingle[string](raw, key)
		case "nephew":
			r.Nephew, err = readMany[string](raw, key)
		case "niece":
			r.Niece, err = readMany[string](raw, key)
		case "parent":
			r.Parent, err = readMany[string](raw, key)
		case "sibling":
			r.Sibling, err = readMany[string](raw, key)
		case "sister":
			r.Sister, err = readMany[string](raw, key)
		case "uncle":
			r.Uncle, err = readMany[string](raw, key)
		default:
			err = unknownMember(key, PersonIRI)
		}
		if err != nil {
			return nil, err
		}
	}
	return r, nil
}
