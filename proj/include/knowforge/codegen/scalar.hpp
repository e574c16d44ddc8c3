#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "knowforge/rdf/term.hpp"

namespace knowforge::codegen {

enum class ScalarKind { kText, kInteger, kDecimal, kBoolean, kDate, kDateTime, kIri };

inline constexpr ScalarKind kAllScalarKinds[] = {
    ScalarKind::kText, ScalarKind::kInteger, ScalarKind::kDecimal, ScalarKind::kBoolean,
    ScalarKind::kDate, ScalarKind::kDateTime, ScalarKind::kIri};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDatatype : public GenerationError {
 public:
  explicit UnsupportedDatatype(rdf::Iri datatype, std::optional<rdf::Iri> property = std::nullopt);

  const rdf::Iri& datatype() const { return datatype_; }
  const std::optional<rdf::Iri>& property() const { return property_; }

 private:
  rdf::Iri datatype_;
  std::optional<rdf::Iri> property_;
};

// XSD datatype -> scalar kind. Throws UnsupportedDatatype.
ScalarKind map_scalar(const rdf::Iri& datatype);

// Canonical datatype for literals of a kind (xsd:integer, xsd:decimal, ...).
rdf::Iri datatype_for(ScalarKind kind);

std::string_view to_string(ScalarKind kind);
std::optional<ScalarKind> parse_scalar_kind(std::string_view text);

}  // namespace knowforge::codegen
