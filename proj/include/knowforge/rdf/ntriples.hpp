#pragma once

#include <string>
#include <string_view>

#include "knowforge/rdf/term.hpp"

namespace knowforge::rdf {

// Canonical N-Triples: one line per triple, lines sorted bytewise, `\n`
// endings. xsd:string literals are written without a datatype.
std::string to_ntriples(const Graph& graph);

std::string format_term(const Term& term);
std::string format_triple(const Triple& triple);

// Escapes a literal's lexical form for use between double quotes.
std::string escape_literal(std::string_view lexical);

}  // namespace knowforge::rdf
