#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knowforge/codegen/naming.hpp"
#include "knowforge/codegen/scalar.hpp"

namespace knowforge::codegen {

// How a target language represents an ontology class.
enum class Construct {
  kRecord,           // plain data record, no inheritance
  kClassLike,        // class with constructor and accessors
  kInterfaceRecord,  // abstract interface plus a default record implementation
  kTraitRecord,      // behavior contract (trait) plus a record implementing it
  kDynamic,          // runtime type registry keyed by class IRI
};

std::string_view to_string(Construct construct);
std::optional<Construct> parse_construct(std::string_view text);

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TargetProfile {
  std::string name;      // CLI token, e.g. "rs"
  std::string language;  // display name
  Construct construct = Construct::kRecord;
  NamingConvention type_naming = NamingConvention::kPascal;
  NamingConvention field_naming = NamingConvention::kLowerSnake;
  NamingConvention file_naming = NamingConvention::kLowerSnake;
  std::string file_extension;
  bool flatten_inheritance = true;
  std::map<ScalarKind, std::string> scalar_map;  // total over ScalarKind
  std::string optional_template;                 // exactly one "{T}"
  std::string collection_template;               // exactly one "{T}"
  bool emit_json = false;
  bool emit_rdf = false;
  std::string preamble;
  std::vector<std::string> reserved_words;

  std::string type_name(const WordSequence& words) const;
  // Field identifier; reserved words get a trailing '_'.
  std::string field_name(const WordSequence& words) const;
  std::string file_name(const WordSequence& words) const;
  std::string optional_of(std::string_view type) const;
  std::string collection_of(std::string_view type) const;
  const std::string& scalar(ScalarKind kind) const { return scalar_map.at(kind); }
};

// Parses one profile document (JSON). `origin` names the source in errors.
// Throws ProfileError when a field is missing or an invariant is violated.
TargetProfile parse_profile(std::string_view json_text, std::string_view origin);

// The profiles shipped with the tool, sorted by name.
std::vector<TargetProfile> bundled_profiles();

// Every *.json file in `dir`, sorted by name. Throws ProfileError.
std::vector<TargetProfile> load_profiles(const std::filesystem::path& dir);

}  // namespace knowforge::codegen
