#include "knowforge/vocab/know.hpp"

#include <stdexcept>

#include "embedded.hpp"
#include "knowforge/rdf/turtle.hpp"

namespace knowforge::vocab {

rdf::Iri base_iri() { return rdf::Iri(std::string(kBaseIri)); }

rdf::Iri know(std::string_view local_name) {
  return rdf::Iri(std::string(kBaseIri) + std::string(local_name));
}

std::string_view bundled_source() {
  for (const auto& file : embedded::vocabulary_files()) {
    if (file.name == "know.ttl") return file.text;
  }
  throw std::logic_error("know.ttl is not embedded");
}

const ontology::OntologyModel& bundled_model() {
  static const ontology::OntologyModel model =
      ontology::build_model(rdf::parse_turtle(bundled_source()), base_iri());
  return model;
}

}  // namespace knowforge::vocab
