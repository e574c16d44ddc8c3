#include "knowforge/codegen/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "embedded.hpp"
#include "json.hpp"

namespace knowforge::codegen {

namespace {

constexpr std::pair<std::string_view, Construct> kConstructs[] = {
    {"record", Construct::kRecord},
    {"class_like", Construct::kClassLike},
    {"interface_record", Construct::kInterfaceRecord},
    {"trait_record", Construct::kTraitRecord},
    {"dynamic", Construct::kDynamic},
};

std::string fill(std::string_view templ, std::string_view type) {
  std::string out(templ);
  const size_t hole = out.find("{T}");
  out.replace(hole, 3, type);
  return out;
}

size_t count_holes(std::string_view templ) {
  size_t n = 0;
  for (size_t pos = templ.find("{T}"); pos != std::string_view::npos;
       pos = templ.find("{T}", pos + 3)) {
    ++n;
  }
  return n;
}

}  // namespace

std::string_view to_string(Construct construct) {
  for (const auto& [name, c] : kConstructs) {
    if (c == construct) return name;
  }
  return "";
}

std::optional<Construct> parse_construct(std::string_view text) {
  for (const auto& [name, c] : kConstructs) {
    if (name == text) return c;
  }
  return std::nullopt;
}

std::string TargetProfile::type_name(const WordSequence& words) const {
  return apply_convention(words, type_naming);
}

std::string TargetProfile::field_name(const WordSequence& words) const {
  std::string name = apply_convention(words, field_naming);
  if (std::find(reserved_words.begin(), reserved_words.end(), name) != reserved_words.end()) {
    name += '_';
  }
  return name;
}

std::string TargetProfile::file_name(const WordSequence& words) const {
  return apply_convention(words, file_naming) + file_extension;
}

std::string TargetProfile::optional_of(std::string_view type) const {
  return fill(optional_template, type);
}

std::string TargetProfile::collection_of(std::string_view type) const {
  return fill(collection_template, type);
}

TargetProfile parse_profile(std::string_view json_text, std::string_view origin) {
  const std::string where(origin);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProfileError(where + ": " + e.what());
  }
  if (!doc.is_object()) throw ProfileError(where + ": profile must be a JSON object");

  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) throw ProfileError(where + ": missing field '" + key + "'");
    return doc.at(key);
  };
  auto text = [&](const char* key) -> std::string {
    const auto& v = require(key);
    if (!v.is_string()) throw ProfileError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
  };
  auto flag = [&](const char* key) -> bool {
    const auto& v = require(key);
    if (!v.is_boolean()) throw ProfileError(where + ": field '" + key + "' must be a boolean");
    return v.get<bool>();
  };
  auto convention = [&](const char* key) {
    const std::string s = text(key);
    const auto c = parse_convention(s);
    if (!c) throw ProfileError(where + ": unknown naming convention '" + s + "'");
    return *c;
  };

  TargetProfile p;
  p.name = text("name");
  p.language = text("language");
  const std::string construct = text("construct");
  const auto c = parse_construct(construct);
  if (!c) throw ProfileError(where + ": unknown construct '" + construct + "'");
  p.construct = *c;
  p.type_naming = convention("type_naming");
  p.field_naming = convention("field_naming");
  p.file_naming = convention("file_naming");
  p.file_extension = text("file_extension");
  p.flatten_inheritance = flag("flatten_inheritance");
  p.optional_template = text("optional_template");
  p.collection_template = text("collection_template");
  p.emit_json = flag("emit_json");
  p.emit_rdf = flag("emit_rdf");
  p.preamble = text("preamble");

  const auto& scalars = require("scalar_map");
  if (!scalars.is_object()) throw ProfileError(where + ": 'scalar_map' must be an object");
  for (const auto& [key, value] : scalars.items()) {
    const auto kind = parse_scalar_kind(key);
    if (!kind) throw ProfileError(where + ": unknown scalar kind '" + key + "'");
    if (!value.is_string()) throw ProfileError(where + ": scalar_map values must be strings");
    p.scalar_map[*kind] = value.get<std::string>();
  }
  for (const auto kind : kAllScalarKinds) {
    if (!p.scalar_map.contains(kind)) {
      throw ProfileError(where + ": scalar_map has no entry for '" + std::string(to_string(kind)) +
                         "'");
    }
  }

  if (doc.contains("reserved_words")) {
    for (const auto& w : doc.at("reserved_words")) p.reserved_words.push_back(w.get<std::string>());
  }

  if (p.name.empty()) throw ProfileError(where + ": 'name' must not be empty");
  if (count_holes(p.optional_template) != 1 || count_holes(p.collection_template) != 1) {
    throw ProfileError(where + ": templates must contain exactly one {T}");
  }
  if (p.construct == Construct::kRecord && !p.flatten_inheritance) {
    throw ProfileError(where + ": record profiles must flatten inheritance");
  }
  return p;
}

namespace {
void sort_by_name(std::vector<TargetProfile>& profiles) {
  std::sort(profiles.begin(), profiles.end(),
            [](const TargetProfile& a, const TargetProfile& b) { return a.name < b.name; });
  for (size_t i = 1; i < profiles.size(); ++i) {
    if (profiles[i].name == profiles[i - 1].name) {
      throw ProfileError("duplicate profile name '" + profiles[i].name + "'");
    }
  }
}
}  // namespace

std::vector<TargetProfile> bundled_profiles() {
  std::vector<TargetProfile> out;
  for (const auto& file : embedded::profile_files()) {
    out.push_back(parse_profile(file.text, file.name));
  }
  sort_by_name(out);
  return out;
}

std::vector<TargetProfile> load_profiles(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw ProfileError(dir.string() + ": not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<TargetProfile> out;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ProfileError(path.string() + ": cannot read");
    std::ostringstream buf;
    buf << in.rdbuf();
    out.push_back(parse_profile(buf.str(), path.string()));
  }
  sort_by_name(out);
  return out;
}

}  // namespace knowforge::codegen
