#pragma once

#include <string>
#include <vector>

#include "knowforge/emit/instance.hpp"

namespace knowforge::tools {

// One interchange case. Cases named reject_* carry JSON the decoder must
// refuse; they have no triples.
struct SmokeCase {
  std::string name;
  std::string json;
  std::string triples;
};

inline constexpr std::string_view kDataNamespace = "https://example.org/know-data/";

rdf::Iri data_iri(std::string_view local);

emit::InstanceRecord alice();

// The committed cases, rendered by the reference codec over the bundled
// vocabulary, sorted by name.
std::vector<SmokeCase> smoke_cases();

}  // namespace knowforge::tools
