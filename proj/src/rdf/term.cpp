#include "knowforge/rdf/term.hpp"

#include <stdexcept>

namespace knowforge::rdf {

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) {
    throw std::invalid_argument("IRI must not be empty");
  }
  if (value_.find(':') == std::string::npos) {
    throw std::invalid_argument("IRI has no scheme: " + value_);
  }
}

Literal make_literal(std::string lexical, Iri datatype) {
  return Literal{std::move(lexical), std::move(datatype), std::nullopt};
}

Literal make_lang_literal(std::string lexical, std::string language) {
  return Literal{std::move(lexical), ns::rdf("langString"), std::move(language)};
}

Term to_term(const Subject& subject) {
  return std::visit([](const auto& s) -> Term { return s; }, subject);
}

namespace ns {
namespace {
Iri join(std::string_view base, std::string_view local) {
  std::string s(base);
  s.append(local);
  return Iri(std::move(s));
}
}  // namespace

Iri rdf(std::string_view local) { return join(kRdf, local); }
Iri rdfs(std::string_view local) { return join(kRdfs, local); }
Iri owl(std::string_view local) { return join(kOwl, local); }
Iri xsd(std::string_view local) { return join(kXsd, local); }
Iri skos(std::string_view local) { return join(kSkos, local); }
}  // namespace ns

}  // namespace knowforge::rdf
