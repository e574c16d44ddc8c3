// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

// Package know is the KNOW ontology SDK. Each type is an interface plus a
// record struct implementing it; FromJSON picks the type from the "type"
// member of a JSON instance.
package know

import (
	"bytes"
	"encoding/json"
	"fmt"
	"math"
	"sort"
	"strconv"
	"strings"
)

// Error kinds reported by the decoders.
const (
	ErrUnknownProperty      = "unknown property"
	ErrCardinalityViolation = "cardinality violation"
	ErrInvalidValue         = "invalid value"
	ErrUnknownType          = "unknown type"
)

// Error is returned by every decoder.
type Error struct {
	Kind    string
	Message string
}

func (e *Error) Error() string { return e.Kind + ": " + e.Message }

func invalid(format string, args ...any) error {
	return &Error{ErrInvalidValue, fmt.Sprintf(format, args...)}
}

// Entity is implemented by every generated record.
type Entity interface {
	EntityID() string
	ClassIRI() string
	// ToJSON returns the JSON document: id, type, then non-empty members
	// sorted by key.
	ToJSON() string
	// ToTriples returns canonical N-Triples, sorted.
	ToTriples() string
}

type scalar interface {
	~string | ~int64 | ~float64 | ~bool
}

const (
	rdfType   = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"
	xsdString = "http://www.w3.org/2001/XMLSchema#string"
)

// CanonicalDecimal formats v in shortest round-trip fixed notation, always
// with a fractional part. It panics on NaN and infinities.
func CanonicalDecimal(v float64) string {
	if math.IsNaN(v) || math.IsInf(v, 0) {
		panic("know: decimal value is not finite")
	}
	if v == 0 {
		return "0.0"
	}
	s := strconv.FormatFloat(v, 'f', -1, 64)
	if !strings.Contains(s, ".") {
		s += ".0"
	}
	return s
}

func quote(s string) string {
	var b strings.Builder
	b.WriteByte('"')
	for i := 0; i < len(s); i++ {
		c := s[i]
		switch c {
		case '"':
			b.WriteString(`\"`)
		case '\\':
			b.WriteString(`\\`)
		case '\b':
			b.WriteString(`\b`)
		case '\f':
			b.WriteString(`\f`)
		case '\n':
			b.WriteString(`\n`)
		case '\r':
			b.WriteString(`\r`)
		case '\t':
			b.WriteString(`\t`)
		default:
			if c < 0x20 {
				fmt.Fprintf(&b, `\u%04x`, c)
			} else {
				b.WriteByte(c)
			}
		}
	}
	b.WriteByte('"')
	return b.String()
}

func ntEscape(s string) string {
	var b strings.Builder
	for i := 0; i < len(s); i++ {
		c := s[i]
		switch c {
		case '"':
			b.WriteString(`\"`)
		case '\\':
			b.WriteString(`\\`)
		case '\b':
			b.WriteString(`\b`)
		case '\f':
			b.WriteString(`\f`)
		case '\n':
			b.WriteString(`\n`)
		case '\r':
			b.WriteString(`\r`)
		case '\t':
			b.WriteString(`\t`)
		default:
			if c < 0x20 || c == 0x7f {
				fmt.Fprintf(&b, `\u%04X`, c)
			} else {
				b.WriteByte(c)
			}
		}
	}
	return b.String()
}

func lexical[T scalar](v T) string {
	switch x := any(v).(type) {
	case string:
		return x
	case int64:
		return strconv.FormatInt(x, 10)
	case float64:
		return CanonicalDecimal(x)
	case bool:
		return strconv.FormatBool(x)
	}
	panic("know: unsupported scalar")
}

func jsonValue[T scalar](v T) string {
	if s, ok := any(v).(string); ok {
		return quote(s)
	}
	return lexical(v)
}

type jsonWriter struct {
	b strings.Builder
}

func newJSONWriter(id, classIRI string) *jsonWriter {
	w := &jsonWriter{}
	w.b.WriteString("{\n  \"id\": " + quote(id) + ",\n  \"type\": " + quote(classIRI))
	return w
}

func writeSingle[T scalar](w *jsonWriter, key string, v *T) {
	if v != nil {
		w.b.WriteString(",\n  " + quote(key) + ": " + jsonValue(*v))
	}
}

func writeMany[T scalar](w *jsonWriter, key string, vs []T) {
	if len(vs) == 0 {
		return
	}
	w.b.WriteString(",\n  " + quote(key) + ": [")
	for i, v := range vs {
		if i > 0 {
			w.b.WriteByte(',')
		}
		w.b.WriteString("\n    " + jsonValue(v))
	}
	w.b.WriteString("\n  ]")
}

func (w *jsonWriter) finish() string {
	return w.b.String() + "\n}\n"
}

type tripleWriter struct {
	subject string
	lines   []string
}

func newTripleWriter(id, classIRI string) *tripleWriter {
	w := &tripleWriter{subject: "<" + id + ">"}
	w.add(rdfType, "<"+classIRI+">")
	return w
}

func (w *tripleWriter) add(property, object string) {
	w.lines = append(w.lines, w.subject+" <"+property+"> "+object+" .\n")
}

func (w *tripleWriter) literal(property, lex, datatype string) {
	object := "\"" + ntEscape(lex) + "\""
	if datatype != xsdString {
		object += "^^<" + datatype + ">"
	}
	w.add(property, object)
}

func literalSingle[T scalar](w *tripleWriter, property string, v *T, datatype string) {
	if v != nil {
		w.literal(property, lexical(*v), datatype)
	}
}

func literalMany[T scalar](w *tripleWriter, property string, vs []T, datatype string) {
	for _, v := range vs {
		w.literal(property, lexical(v), datatype)
	}
}

func referenceSingle(w *tripleWriter, property string, v *string) {
	if v != nil {
		w.add(property, "<"+*v+">")
	}
}

func referenceMany(w *tripleWriter, property string, vs []string) {
	for _, v := range vs {
		w.add(property, "<"+v+">")
	}
}

func (w *tripleWriter) finish() string {
	sort.Strings(w.lines)
	return strings.Join(w.lines, "")
}

func parseObject(data []byte) (map[string]json.RawMessage, error) {
	var object map[string]json.RawMessage
	if err := json.Unmarshal(data, &object); err != nil {
		return nil, invalid("malformed JSON: %v", err)
	}
	if object == nil {
		return nil, invalid("instance must be a JSON object")
	}
	return object, nil
}

func readString(object map[string]json.RawMessage, key string) (string, error) {
	raw, ok := object[key]
	var s string
	if !ok || len(raw) == 0 || raw[0] != '"' || json.Unmarshal(raw, &s) != nil {
		return "", invalid("instance needs a string %q member", key)
	}
	return s, nil
}

// readID checks id and type and returns the id.
func readID(object map[string]json.RawMessage, classIRI string) (string, error) {
	typ, err := readString(object, "type")
	if err != nil {
		return "", err
	}
	if typ != classIRI {
		return "", invalid("instance type is not %s", classIRI)
	}
	return readString(object, "id")
}

func decodeValue[T scalar](raw json.RawMessage, key string) (T, error) {
	var out T
	raw = bytes.TrimSpace(raw)
	isNumber := len(raw) > 0 && (raw[0] == '-' || (raw[0] >= '0' && raw[0] <= '9'))
	switch p := any(&out).(type) {
	case *string:
		if len(raw) == 0 || raw[0] != '"' || json.Unmarshal(raw, p) != nil {
			return out, invalid("member %q expects a string", key)
		}
	case *int64:
		v, err := strconv.ParseInt(string(raw), 10, 64)
		if !isNumber || err != nil {
			return out, invalid("member %q expects a 64-bit integer", key)
		}
		*p = v
	case *float64:
		v, err := strconv.ParseFloat(string(raw), 64)
		if !isNumber || err != nil {
			return out, invalid("member %q expects a finite number", key)
		}
		*p = v
	case *bool:
		if json.Unmarshal(raw, p) != nil || raw[0] == 'n' {
			return out, invalid("member %q expects a boolean", key)
		}
	}
	return out, nil
}

func readSingle[T scalar](raw json.RawMessage, key string) (*T, error) {
	raw = bytes.TrimSpace(raw)
	if len(raw) > 0 && raw[0] == '[' {
		return nil, &Error{ErrCardinalityViolation, fmt.Sprintf("member %q is single-valued", key)}
	}
	if string(raw) == "null" {
		return nil, nil
	}
	v, err := decodeValue[T](raw, key)
	if err != nil {
		return nil, err
	}
	return &v, nil
}

func readMany[T scalar](raw json.RawMessage, key string) ([]T, error) {
	var items []json.RawMessage
	raw = bytes.TrimSpace(raw)
	if len(raw) == 0 || raw[0] != '[' || json.Unmarshal(raw, &items) != nil {
		return nil, invalid("member %q must be an array", key)
	}
	out := make([]T, 0, len(items))
	for _, item := range items {
		v, err := decodeValue[T](item, key)
		if err != nil {
			return nil, err
		}
		out = append(out, v)
	}
	return out, nil
}

func unknownMember(key, classIRI string) error {
	return &Error{ErrUnknownProperty, fmt.Sprintf("member %q is not a property of %s", key, classIRI)}
}

// TypeNames lists the generated type names, sorted.
var TypeNames = []string{
	"Airport",
	"Appointment",
	"Birthday",
	"Cafe",
	"Event",
	"Group",
	"Holiday",
	"Hospital",
	"Hotel",
	"Landmark",
	"Meeting",
	"Organization",
	"Party",
	"Person",
	"Place",
	"PlaceOfWorship",
	"Restaurant",
}

// FromJSON decodes an instance of any generated type, chosen by its "type"
// member.
func FromJSON(data []byte) (Entity, error) {
	object, err := parseObject(data)
	if err != nil {
		return nil, err
	}
	typ, err := readString(object, "type")
	if err != nil {
		return nil, err
	}
	switch typ {
	case AirportIRI:
		r, err := decodeAirport(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case AppointmentIRI:
		r, err := decodeAppointment(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case BirthdayIRI:
		r, err := decodeBirthday(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case CafeIRI:
		r, err := decodeCafe(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case EventIRI:
		r, err := decodeEvent(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case GroupIRI:
		r, err := decodeGroup(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case HolidayIRI:
		r, err := decodeHoliday(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case HospitalIRI:
		r, err := decodeHospital(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case HotelIRI:
		r, err := decodeHotel(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case LandmarkIRI:
		r, err := decodeLandmark(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case MeetingIRI:
		r, err := decodeMeeting(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case OrganizationIRI:
		r, err := decodeOrganization(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case PartyIRI:
		r, err := decodeParty(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case PersonIRI:
		r, err := decodePerson(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case PlaceIRI:
		r, err := decodePlace(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case PlaceOfWorshipIRI:
		r, err := decodePlaceOfWorship(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	case RestaurantIRI:
		r, err := decodeRestaurant(object)
		if err != nil {
			return nil, err
		}
		return r, nil
	}
	return nil, &Error{ErrUnknownType, "no generated type for " + typ}
}
