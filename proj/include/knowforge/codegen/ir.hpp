#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knowforge/codegen/naming.hpp"
#include "knowforge/codegen/profile.hpp"
#include "knowforge/codegen/scalar.hpp"
#include "knowforge/ontology/model.hpp"

namespace knowforge::codegen {

using rdf::Iri;

// A field whose values are IRIs of instances of `target`.
struct EntityReference {
  Iri target;
  friend bool operator==(const EntityReference&, const EntityReference&) = default;
};

using FieldValue = std::variant<ScalarKind, EntityReference>;

enum class Cardinality { kOptionalSingle, kMany };

struct FieldSpec {
  WordSequence words;
  FieldValue value;
  // kOptionalSingle exactly when the property is functional.
  Cardinality cardinality = Cardinality::kMany;
  Iri origin;  // class whose domain declares the property
  Iri property_iri;

  bool is_reference() const { return std::holds_alternative<EntityReference>(value); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct TypeSpec {
  WordSequence words;
  Iri class_iri;
  std::optional<Iri> parent;
  std::vector<FieldSpec> own_fields;
  // Inherited fields (ancestor by ancestor, nearest first) followed by
  // own_fields. Field words are unique.
  std::vector<FieldSpec> all_fields;
  std::optional<std::string> doc;

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

// The field a property contributes to a class. Throws UnsupportedDatatype or
// GenerationError when the ranges cannot be mapped.
FieldSpec make_field(const ontology::OntologyModel& model, const ontology::OntologyProperty& property,
                     const Iri& origin);

// Lowers a validated model. Output is topologically ordered (every class
// after its superclasses), ties broken by rendered type name. With
// profile.flatten_inheritance the parent is cleared.
//
// Throws UnsupportedDatatype naming the offending property, and
// GenerationError for models validate() would have rejected.
std::vector<TypeSpec> build_ir(const ontology::OntologyModel& model, const TargetProfile& profile);

}  // namespace knowforge::codegen
