#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knowforge/ontology/model.hpp"
#include "knowforge/rdf/term.hpp"

namespace knowforge::ontology {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity severity);

// Diagnostic codes.
namespace code {
inline constexpr std::string_view kCycle = "CYCLE";
inline constexpr std::string_view kDanglingRange = "DANGLING_RANGE";
inline constexpr std::string_view kDanglingDomain = "DANGLING_DOMAIN";
inline constexpr std::string_view kDanglingInverse = "DANGLING_INVERSE";
inline constexpr std::string_view kDanglingSuperprop = "DANGLING_SUPERPROP";
inline constexpr std::string_view kNoDomain = "NO_DOMAIN";
inline constexpr std::string_view kNaming = "NAMING";
inline constexpr std::string_view kDuplicateLocalName = "DUPLICATE_LOCAL_NAME";
}  // namespace code

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  std::optional<rdf::Iri> subject;
  std::optional<rdf::SourceLocation> location;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "error CYCLE https://know.dev/A: message"
std::string format_diagnostic(const Diagnostic& diagnostic);

// All findings, errors before warnings, then by subject IRI. An empty result
// means the model is ready for code generation.
std::vector<Diagnostic> validate(const OntologyModel& model);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace knowforge::ontology
