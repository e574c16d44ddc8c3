#include "knowforge/codegen/scalar.hpp"

#include <array>
#include <utility>

namespace knowforge::codegen {

namespace {

std::string describe(const rdf::Iri& datatype, const std::optional<rdf::Iri>& property) {
  std::string out = "unsupported datatype " + datatype.str();
  if (property) out += " (range of " + property->str() + ")";
  return out;
}

constexpr std::array<std::pair<std::string_view, ScalarKind>, 10> kXsdTable = {{
    {"string", ScalarKind::kText},
    {"integer", ScalarKind::kInteger},
    {"int", ScalarKind::kInteger},
    {"long", ScalarKind::kInteger},
    {"decimal", ScalarKind::kDecimal},
    {"double", ScalarKind::kDecimal},
    {"float", ScalarKind::kDecimal},
    {"boolean", ScalarKind::kBoolean},
    {"date", ScalarKind::kDate},
    {"dateTime", ScalarKind::kDateTime},
}};

}  // namespace

UnsupportedDatatype::UnsupportedDatatype(rdf::Iri datatype, std::optional<rdf::Iri> property)
    : GenerationError(describe(datatype, property)),
      datatype_(std::move(datatype)),
      property_(std::move(property)) {}

ScalarKind map_scalar(const rdf::Iri& datatype) {
  const std::string& s = datatype.str();
  if (s.starts_with(rdf::ns::kXsd)) {
    const std::string_view local = std::string_view(s).substr(rdf::ns::kXsd.size());
    if (local == "anyURI") return ScalarKind::kIri;
    for (const auto& [name, kind] : kXsdTable) {
      if (name == local) return kind;
    }
  }
  throw UnsupportedDatatype(datatype);
}

rdf::Iri datatype_for(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::kText: return rdf::ns::xsd("string");
    case ScalarKind::kInteger: return rdf::ns::xsd("integer");
    case ScalarKind::kDecimal: return rdf::ns::xsd("decimal");
    case ScalarKind::kBoolean: return rdf::ns::xsd("boolean");
    case ScalarKind::kDate: return rdf::ns::xsd("date");
    case ScalarKind::kDateTime: return rdf::ns::xsd("dateTime");
    case ScalarKind::kIri: return rdf::ns::xsd("anyURI");
  }
  throw std::logic_error("bad ScalarKind");
}

std::string_view to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::kText: return "text";
    case ScalarKind::kInteger: return "integer";
    case ScalarKind::kDecimal: return "decimal";
    case ScalarKind::kBoolean: return "boolean";
    case ScalarKind::kDate: return "date";
    case ScalarKind::kDateTime: return "datetime";
    case ScalarKind::kIri: return "iri";
  }
  return "";
}

std::optional<ScalarKind> parse_scalar_kind(std::string_view text) {
  for (const auto kind : kAllScalarKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

}  // namespace knowforge::codegen
