// Go SDK: an interface per type plus a record struct implementing it.
// know.go holds the runtime and the decoder table.

#include <algorithm>

#include "common.hpp"

namespace knowforge::emit::detail {

namespace {

constexpr std::string_view kRuntime = R"go(
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
)go";

// Pads the first column so struct fields line up the way gofmt aligns them.
std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows,
                    std::string_view indent) {
  size_t width = 0;
  for (const auto& [a, b] : rows) width = std::max(width, a.size());
  std::string out;
  for (const auto& [a, b] : rows) {
    out += std::string(indent) + a + std::string(width - a.size() + 1, ' ') + b + "\n";
  }
  return out;
}

std::string go_doc(const TypeSpec& type, std::string_view lead) {
  if (!type.doc) return "";
  std::string text = std::string(lead) + " " + *type.doc;
  std::string out;
  for (const auto& line : wrap(text, 76)) out += "// " + line + "\n";
  return out;
}

std::string type_file(const TypeSpec& type, const TargetProfile& profile) {
  const std::string name = profile.type_name(type.words);
  const std::string record = name + "Record";
  const std::string iri_const = name + "IRI";
  const auto fields = by_json_key(type.all_fields);

  std::string out = "\npackage know\n\n";
  out += "// " + iri_const + " is the class IRI of " + name + ".\n";
  out += "const " + iri_const + " = " + string_literal(type.class_iri.str()) + "\n\n";

  out += type.doc ? go_doc(type, name + ":") : "// " + name + " is a generated entity interface.\n";
  out += "type " + name + " interface {\n\tEntity\n";
  for (const FieldSpec* f : fields) {
    out += "\tGet" + profile.field_name(f->words) + "() " + field_type(profile, *f) + "\n";
  }
  out += "}\n\n";

  out += "// " + record + " is the default implementation of " + name + ".\n";
  out += "type " + record + " struct {\n";
  std::vector<std::pair<std::string, std::string>> rows = {{"ID", "string"}};
  for (const FieldSpec* f : fields) rows.emplace_back(profile.field_name(f->words), field_type(profile, *f));
  out += aligned(rows, "\t");
  out += "}\n\n";

  out += "var _ " + name + " = (*" + record + ")(nil)\n\n";
  out += "func (r *" + record + ") EntityID() string { return r.ID }\n";
  out += "func (r *" + record + ") ClassIRI() string { return " + iri_const + " }\n";
  for (const FieldSpec* f : fields) {
    const std::string field = profile.field_name(f->words);
    out += "func (r *" + record + ") Get" + field + "() " + field_type(profile, *f) + " { return r." +
           field + " }\n";
  }

  out += "\n// ToJSON encodes the record in the shared JSON shape.\n";
  out += "func (r *" + record + ") ToJSON() string {\n\tw := newJSONWriter(r.ID, " + iri_const + ")\n";
  for (const FieldSpec* f : fields) {
    out += std::string("\t") + (is_single(*f) ? "writeSingle" : "writeMany") + "(w, " +
           string_literal(json_key(*f)) + ", r." + profile.field_name(f->words) + ")\n";
  }
  out += "\treturn w.finish()\n}\n\n";

  out += "// ToTriples exports the record as canonical N-Triples.\n";
  out += "func (r *" + record + ") ToTriples() string {\n\tw := newTripleWriter(r.ID, " + iri_const + ")\n";
  for (const FieldSpec& f : type.all_fields) {
    const std::string field = profile.field_name(f.words);
    const std::string iri = string_literal(f.property_iri.str());
    if (f.is_reference()) {
      out += std::string("\t") + (is_single(f) ? "referenceSingle" : "referenceMany") + "(w, " + iri +
             ", r." + field + ")\n";
    } else {
      out += std::string("\t") + (is_single(f) ? "literalSingle" : "literalMany") + "(w, " + iri +
             ", r." + field + ", " + string_literal(codegen::datatype_for(value_kind(f)).str()) + ")\n";
    }
  }
  out += "\treturn w.finish()\n}\n\n";

  out += "// Decode" + name + " reads a " + name + " from the shared JSON shape.\n";
  out += "func Decode" + name + "(data []byte) (*" + record + ", error) {\n";
  out += "\tobject, err := parseObject(data)\n\tif err != nil {\n\t\treturn nil, err\n\t}\n";
  out += "\treturn decode" + name + "(object)\n}\n\n";

  out += "func decode" + name + "(object map[string]json.RawMessage) (*" + record + ", error) {\n";
  out += "\tid, err := readID(object, " + iri_const + ")\n\tif err != nil {\n\t\treturn nil, err\n\t}\n";
  out += "\tr := &" + record + "{ID: id}\n";
  out += std::string("\tfor key") + (fields.empty() ? "" : ", raw") + " := range object {\n";
  out += "\t\tswitch key {\n\t\tcase \"id\", \"type\":\n";
  for (const FieldSpec* f : fields) {
    const std::string element = element_type(profile, *f);
    out += "\t\tcase " + string_literal(json_key(*f)) + ":\n\t\t\tr." + profile.field_name(f->words) + ", err = " +
           (is_single(*f) ? "readSingle" : "readMany") + "[" + element + "](raw, key)\n";
  }
  out += "\t\tdefault:\n\t\t\terr = unknownMember(key, " + iri_const + ")\n\t\t}\n";
  out += "\t\tif err != nil {\n\t\t\treturn nil, err\n\t\t}\n\t}\n\treturn r, nil\n}\n";
  return out;
}

}  // namespace

FileSet emit_go(const std::vector<TypeSpec>& ir, const TargetProfile& profile) {
  FileSet files;
  for (const auto& t : ir) {
    std::string text = type_file(t, profile);
    // Only files that decode need the json import.
    text.insert(text.find("\n\n", 1) + 2, "import \"encoding/json\"\n\n");
    add_file(files, profile.file_name(t.words), std::move(text));
  }

  const auto types = by_type_name(ir, profile);
  std::string manifest =
      "\n// Package know is the KNOW ontology SDK. Each type is an interface plus a\n"
      "// record struct implementing it; FromJSON picks the type from the \"type\"\n"
      "// member of a JSON instance.\npackage know\n";
  manifest += kRuntime;
  manifest += "\n// TypeNames lists the generated type names, sorted.\nvar TypeNames = []string{";
  for (const TypeSpec* t : types) manifest += "\n\t" + string_literal(profile.type_name(t->words)) + ",";
  manifest += types.empty() ? "}\n" : "\n}\n";
  manifest +=
      "\n// FromJSON decodes an instance of any generated type, chosen by its \"type\"\n// member.\n"
      "func FromJSON(data []byte) (Entity, error) {\n"
      "\tobject, err := parseObject(data)\n\tif err != nil {\n\t\treturn nil, err\n\t}\n"
      "\ttyp, err := readString(object, \"type\")\n\tif err != nil {\n\t\treturn nil, err\n\t}\n"
      "\tswitch typ {\n";
  for (const TypeSpec* t : types) {
    const std::string name = profile.type_name(t->words);
    manifest += "\tcase " + name + "IRI:\n\t\tr, err := decode" + name +
                "(object)\n\t\tif err != nil {\n\t\t\treturn nil, err\n\t\t}\n\t\treturn r, nil\n";
  }
  manifest += "\t}\n\treturn nil, &Error{ErrUnknownType, \"no generated type for \" + typ}\n}\n";
  add_file(files, "know.go", std::move(manifest));
  return files;
}

}  // namespace knowforge::emit::detail
