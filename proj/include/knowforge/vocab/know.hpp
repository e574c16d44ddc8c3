#pragma once

#include <string_view>

#include "knowforge/ontology/model.hpp"
#include "knowforge/rdf/term.hpp"

namespace knowforge::vocab {

inline constexpr std::string_view kBaseIri = "https://know.dev/";

rdf::Iri base_iri();
rdf::Iri know(std::string_view local_name);

// Turtle text of the bundled vocabulary (identical to vocab/know.ttl).
std::string_view bundled_source();

// build_model(parse_turtle(bundled_source()), base_iri()), built once.
const ontology::OntologyModel& bundled_model();

}  // namespace knowforge::vocab
