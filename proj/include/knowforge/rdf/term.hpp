#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace knowforge::rdf {

// An absolute IRI. Stored without angle brackets.
class Iri {
 public:
  // Throws std::invalid_argument unless `value` is non-empty and contains ':'.
  explicit Iri(std::string value);

  const std::string& str() const { return value_; }

  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

// Blank node label without the "_:" prefix.
struct BlankNode {
  std::string label;

  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
  friend bool operator==(const BlankNode&, const BlankNode&) = default;
};

struct Literal {
  std::string lexical;
  Iri datatype;
  // Present only when datatype is rdf:langString.
  std::optional<std::string> language;

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Subject = std::variant<Iri, BlankNode>;
using Term = std::variant<Iri, BlankNode, Literal>;

struct Triple {
  Subject subject;
  Iri predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Graph {
  std::vector<Triple> triples;
  std::map<std::string, Iri> prefixes;
  std::optional<Iri> base;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct SourceLocation {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

Literal make_literal(std::string lexical, Iri datatype);
Literal make_lang_literal(std::string lexical, std::string language);

Term to_term(const Subject& subject);

// Well-known vocabulary IRIs.
namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";

Iri rdf(std::string_view local);
Iri rdfs(std::string_view local);
Iri owl(std::string_view local);
Iri xsd(std::string_view local);
Iri skos(std::string_view local);
}  // namespace ns

}  // namespace knowforge::rdf
