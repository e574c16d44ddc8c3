#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knowforge/rdf/term.hpp"

namespace knowforge::ontology {

using rdf::Iri;

struct OntologyClass {
  Iri iri;
  std::string local_name;
  std::optional<std::string> label;
  std::optional<std::string> comment;
  // Sorted, no duplicates, never contains `iri`.
  std::vector<Iri> superclasses;
  // External equivalents (owl:equivalentClass, skos:exactMatch), sorted.
  std::vector<Iri> mappings;

  friend bool operator==(const OntologyClass&, const OntologyClass&) = default;
};

struct OntologyProperty {
  Iri iri;
  std::string local_name;
  std::optional<std::string> label;
  std::optional<std::string> comment;
  std::vector<Iri> domains;
  std::vector<Iri> ranges;
  bool functional = false;
  std::optional<Iri> inverse_of;
  std::vector<Iri> super_properties;
  std::vector<Iri> mappings;

  friend bool operator==(const OntologyProperty&, const OntologyProperty&) = default;
};

struct OntologyModel {
  Iri base;
  std::map<Iri, OntologyClass> classes;
  std::map<Iri, OntologyProperty> properties;
  std::map<std::string, Iri> prefixes;

  const OntologyClass* find_class(const Iri& iri) const;
  const OntologyProperty* find_property(const Iri& iri) const;

  friend bool operator==(const OntologyModel&, const OntologyModel&) = default;
};

class UnknownClass : public std::out_of_range {
 public:
  explicit UnknownClass(const Iri& iri);
  const Iri& iri() const { return iri_; }

 private:
  Iri iri_;
};

// The IRI suffix after `base`; for foreign IRIs, the text after the last '/'
// or '#'.
std::string local_name_of(const Iri& iri, const Iri& base);

// Folds class and property declarations out of `graph`. Never fails; use
// validate() to find structural problems. The result does not depend on the
// order of the graph's triples.
OntologyModel build_model(const rdf::Graph& graph, const Iri& base);

// Transitive superclasses that are classes of the model, nearest first.
// Breadth-first; within one level, IRIs ascend. Throws UnknownClass.
std::vector<Iri> ancestors(const OntologyModel& model, const Iri& class_iri);

// Properties whose domain meets {class} or its ancestors. Properties declared
// on the class itself come first, then inherited ones; each group is sorted
// by local name. Throws UnknownClass.
std::vector<OntologyProperty> effective_properties(const OntologyModel& model,
                                                   const Iri& class_iri);

}  // namespace knowforge::ontology
