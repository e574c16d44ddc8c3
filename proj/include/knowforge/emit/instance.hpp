#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knowforge/codegen/scalar.hpp"
#include "knowforge/ontology/model.hpp"

namespace knowforge::emit {

using rdf::Iri;

struct ScalarValue {
  codegen::ScalarKind kind = codegen::ScalarKind::kText;
  std::string lexical;

  friend auto operator<=>(const ScalarValue&, const ScalarValue&) = default;
  friend bool operator==(const ScalarValue&, const ScalarValue&) = default;
};

struct IriReference {
  Iri iri;

  friend auto operator<=>(const IriReference&, const IriReference&) = default;
  friend bool operator==(const IriReference&, const IriReference&) = default;
};

using InstanceValue = std::variant<ScalarValue, IriReference>;

// One entity instance. Property lists are never empty; functional properties
// hold at most one value.
struct InstanceRecord {
  Iri id;
  Iri type;
  std::map<Iri, std::vector<InstanceValue>> values;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownProperty : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

class CardinalityViolation : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

// A value of the wrong kind, or a lexical form that is not valid for its kind.
class InvalidValue : public InstanceError {
 public:
  using InstanceError::InstanceError;
};

// JSON shape shared by the reference codec and every generated SDK:
//
//   {
//     "id": "<iri>",
//     "type": "<class iri>",
//     "<camelName>": <value> | [<value>, ...],
//     ...
//   }
//
// Members after id and type are sorted bytewise; two-space indent; trailing
// newline. Single-valued (functional) properties are written directly, the
// rest as arrays; references and non-numeric scalars as strings.
std::string instance_to_json(const InstanceRecord& record, const ontology::OntologyModel& model);
InstanceRecord instance_from_json(std::string_view json, const ontology::OntologyModel& model);

// Canonical N-Triples: one rdf:type line plus one line per value.
std::string instance_to_triples(const InstanceRecord& record,
                                const ontology::OntologyModel& model);

// JSON string literal, quotes included. Escapes '"', '\\', and control
// characters (short forms where JSON has them, else lowercase \u00xx).
std::string json_quote(std::string_view text);

// Shortest round-trip fixed-point form, always with a fractional part
// ("12.5", "3.0", "100000000000000000000.0").
std::string canonical_decimal(double value);

// Validates and canonicalizes a lexical form. Throws InvalidValue.
std::string canonical_lexical(codegen::ScalarKind kind, std::string_view lexical);

}  // namespace knowforge::emit
