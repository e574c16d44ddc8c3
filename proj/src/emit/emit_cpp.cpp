// Class-like C++ SDK. know.hpp carries the runtime (entity base, JSON and
// N-Triples writers, decoder registry) and includes every type header.

#include "common.hpp"

namespace knowforge::emit::detail {

namespace {

constexpr std::string_view kRuntime = R"cpp(
// Including this header pulls in every generated type. Type headers include
// it with KNOW_HPP_RUNTIME_ONLY defined to get just the runtime.

#ifndef KNOW_HPP_RUNTIME
#define KNOW_HPP_RUNTIME

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

namespace know {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownProperty : public Error {
 public:
  using Error::Error;
};

class CardinalityViolation : public Error {
 public:
  using Error::Error;
};

class InvalidValue : public Error {
 public:
  using Error::Error;
};

class UnknownType : public Error {
 public:
  using Error::Error;
};

// Base of every generated type.
class Entity {
 public:
  explicit Entity(std::string id) : entity_id_(std::move(id)) {}
  virtual ~Entity() = default;

  const std::string& id() const { return entity_id_; }

  virtual std::string_view class_iri() const = 0;
  // JSON document: id, type, then non-empty members sorted by key.
  virtual std::string to_json() const = 0;
  // Canonical N-Triples, sorted.
  virtual std::string to_triples() const = 0;

 private:
  std::string entity_id_;
};

namespace detail {

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";

inline std::string json_quote(std::string_view text) {
  std::string out = "\"";
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

inline std::string nt_escape(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// Shortest round-trip fixed notation, always with a fractional part.
inline std::string canonical_decimal(double value) {
  if (!std::isfinite(value)) throw InvalidValue("decimal value is not finite");
  if (value == 0) value = 0;
  char buf[512];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc()) throw InvalidValue("decimal value cannot be formatted");
  std::string out(buf, end);
  if (out.find('.') == std::string::npos) out += ".0";
  return out;
}

inline std::string lexical(const std::string& value) { return value; }
inline std::string lexical(std::int64_t value) { return std::to_string(value); }
inline std::string lexical(double value) { return canonical_decimal(value); }
inline std::string lexical(bool value) { return value ? "true" : "false"; }

inline std::string json_value(const std::string& value) { return json_quote(value); }
template <typename T>
std::string json_value(const T& value) {
  return lexical(value);
}

class JsonWriter {
 public:
  JsonWriter(std::string_view id, std::string_view type)
      : out_("{\n  \"id\": " + json_quote(id) + ",\n  \"type\": " + json_quote(type)) {}

  template <typename T>
  void member(std::string_view key, const std::optional<T>& value) {
    if (value) out_ += ",\n  " + json_quote(key) + ": " + json_value(*value);
  }

  template <typename T>
  void member(std::string_view key, const std::vector<T>& values) {
    if (values.empty()) return;
    out_ += ",\n  " + json_quote(key) + ": [";
    for (size_t i = 0; i < values.size(); ++i) {
      out_ += i == 0 ? "\n    " : ",\n    ";
      out_ += json_value(static_cast<T>(values[i]));
    }
    out_ += "\n  ]";
  }

  std::string finish() { return std::move(out_) + "\n}\n"; }

 private:
  std::string out_;
};

class TripleWriter {
 public:
  TripleWriter(std::string_view id, std::string_view type) : subject_("<" + std::string(id) + ">") {
    add(kRdfType, "<" + std::string(type) + ">");
  }

  template <typename T>
  void literals(std::string_view property, const std::optional<T>& value,
                std::string_view datatype) {
    if (value) literal(property, lexical(*value), datatype);
  }

  template <typename T>
  void literals(std::string_view property, const std::vector<T>& values,
                std::string_view datatype) {
    for (const auto& v : values) literal(property, lexical(static_cast<T>(v)), datatype);
  }

  void references(std::string_view property, const std::optional<std::string>& value) {
    if (value) add(property, "<" + *value + ">");
  }

  void references(std::string_view property, const std::vector<std::string>& values) {
    for (const auto& v : values) add(property, "<" + v + ">");
  }

  std::string finish() {
    std::sort(lines_.begin(), lines_.end());
    std::string out;
    for (const auto& line : lines_) out += line;
    return out;
  }

 private:
  void literal(std::string_view property, const std::string& lex, std::string_view datatype) {
    std::string object = "\"" + nt_escape(lex) + "\"";
    if (datatype != kXsdString) object += "^^<" + std::string(datatype) + ">";
    add(property, object);
  }

  void add(std::string_view property, const std::string& object) {
    lines_.push_back(subject_ + " <" + std::string(property) + "> " + object + " .\n");
  }

  std::string subject_;
  std::vector<std::string> lines_;
};

template <typename T>
T json_as(const nlohmann::json& value, std::string_view key);

template <>
inline std::string json_as<std::string>(const nlohmann::json& value, std::string_view key) {
  if (!value.is_string()) throw InvalidValue("member \"" + std::string(key) + "\" expects a string");
  return value.get<std::string>();
}

template <>
inline std::int64_t json_as<std::int64_t>(const nlohmann::json& value, std::string_view key) {
  const bool too_big = value.is_number_unsigned() &&
                       value.get<std::uint64_t>() >
                           static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (!value.is_number_integer() || too_big) {
    throw InvalidValue("member \"" + std::string(key) + "\" expects a 64-bit integer");
  }
  return value.get<std::int64_t>();
}

template <>
inline double json_as<double>(const nlohmann::json& value, std::string_view key) {
  if (!value.is_number()) throw InvalidValue("member \"" + std::string(key) + "\" expects a number");
  return value.get<double>();
}

template <>
inline bool json_as<bool>(const nlohmann::json& value, std::string_view key) {
  if (!value.is_boolean()) throw InvalidValue("member \"" + std::string(key) + "\" expects a boolean");
  return value.get<bool>();
}

template <typename T>
void read(const nlohmann::json& value, std::string_view key, std::optional<T>& out) {
  if (value.is_array()) {
    throw CardinalityViolation("member \"" + std::string(key) + "\" is single-valued");
  }
  if (value.is_null()) {
    out.reset();
  } else {
    out = json_as<T>(value, key);
  }
}

template <typename T>
void read(const nlohmann::json& value, std::string_view key, std::vector<T>& out) {
  if (!value.is_array()) throw InvalidValue("member \"" + std::string(key) + "\" must be an array");
  out.clear();
  for (const auto& item : value) out.push_back(json_as<T>(item, key));
}

inline nlohmann::json parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidValue(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string type_of(const nlohmann::json& object) {
  if (!object.is_object()) throw InvalidValue("instance must be a JSON object");
  const auto it = object.find("type");
  if (it == object.end() || !it->is_string()) {
    throw InvalidValue("instance needs a string \"type\" member");
  }
  return it->get<std::string>();
}

// Checks id and type; returns the id.
inline std::string read_id(const nlohmann::json& object, std::string_view class_iri) {
  if (type_of(object) != class_iri) {
    throw InvalidValue("instance type is not " + std::string(class_iri));
  }
  const auto it = object.find("id");
  if (it == object.end() || !it->is_string()) {
    throw InvalidValue("instance needs a string \"id\" member");
  }
  return it->get<std::string>();
}

[[noreturn]] inline void unknown_member(std::string_view key, std::string_view class_iri) {
  throw UnknownProperty("member \"" + std::string(key) + "\" is not a property of " +
                        std::string(class_iri));
}

using Decoder = std::unique_ptr<Entity> (*)(const nlohmann::json&);

inline std::map<std::string, Decoder, std::less<>>& registry() {
  static std::map<std::string, Decoder, std::less<>> decoders;
  return decoders;
}

template <typename T>
bool register_type() {
  registry().emplace(std::string(T::kClassIri),
                     [](const nlohmann::json& object) -> std::unique_ptr<Entity> {
                       return T::from_json_object(object);
                     });
  return true;
}

}  // namespace detail

// Decodes an instance of any generated type, chosen by its "type" member.
inline std::unique_ptr<Entity> from_json(std::string_view text) {
  const nlohmann::json object = detail::parse(text);
  const std::string type = detail::type_of(object);
  const auto& decoders = detail::registry();
  const auto it = decoders.find(type);
  if (it == decoders.end()) throw UnknownType("no generated type for " + type);
  return it->second(object);
}

}  // namespace know

#endif  // KNOW_HPP_RUNTIME
)cpp";

std::string member(const TargetProfile& profile, const FieldSpec& f) {
  return profile.field_name(f.words) + "_";
}

std::string type_header(const TypeSpec& type, const TargetProfile& profile,
                        const std::map<Iri, const TypeSpec*>& by_iri) {
  const std::string name = profile.type_name(type.words);
  const TypeSpec* parent = nullptr;
  if (type.parent) {
    const auto it = by_iri.find(*type.parent);
    if (it == by_iri.end()) {
      throw codegen::GenerationError("parent of " + type.class_iri.str() + " is not in the IR");
    }
    parent = it->second;
  }
  const std::string base = parent ? profile.type_name(parent->words) : "Entity";

  std::string out = "\n#pragma once\n\n#define KNOW_HPP_RUNTIME_ONLY\n#include \"know.hpp\"\n"
                    "#undef KNOW_HPP_RUNTIME_ONLY\n";
  if (parent) out += "#include \"" + profile.file_name(parent->words) + "\"\n";
  out += "\nnamespace know {\n\n";
  out += doc_block(type, "// ");
  out += "class " + name + " : public " + base + " {\n public:\n";
  out += "  static constexpr std::string_view kClassIri = " + string_literal(type.class_iri.str()) + ";\n\n";
  out += "  explicit " + name + "(std::string id) : " + base + "(std::move(id)) {}\n";

  if (!type.own_fields.empty()) out += "\n";
  for (const auto& f : type.own_fields) {
    const std::string accessor = profile.field_name(f.words);
    const std::string t = field_type(profile, f);
    out += "  const " + t + "& " + accessor + "() const { return " + member(profile, f) + "; }\n";
    out += "  void set_" + accessor + "(" + t + " value) { " + member(profile, f) +
           " = std::move(value); }\n";
  }

  out += "\n  std::string_view class_iri() const override { return kClassIri; }\n\n";

  out += "  std::string to_json() const override {\n";
  out += "    detail::JsonWriter w(id(), kClassIri);\n";
  for (const FieldSpec* f : by_json_key(type.all_fields)) {
    out += "    w.member(" + string_literal(json_key(*f)) + ", " + member(profile, *f) + ");\n";
  }
  out += "    return w.finish();\n  }\n\n";

  out += "  std::string to_triples() const override {\n";
  out += "    detail::TripleWriter w(id(), kClassIri);\n";
  for (const FieldSpec& f : type.all_fields) {
    if (f.is_reference()) {
      out += "    w.references(" + string_literal(f.property_iri.str()) + ", " + member(profile, f) + ");\n";
    } else {
      out += "    w.literals(" + string_literal(f.property_iri.str()) + ", " + member(profile, f) + ",\n" +
             "               " + string_literal(codegen::datatype_for(value_kind(f)).str()) + ");\n";
    }
  }
  out += "    return w.finish();\n  }\n\n";

  out += "  static " + name + " from_json(std::string_view text) {\n";
  out += "    return std::move(*from_json_object(detail::parse(text)));\n  }\n\n";

  out += "  static std::unique_ptr<" + name + "> from_json_object(const nlohmann::json& object) {\n";
  out += "    auto out = std::make_unique<" + name + ">(detail::read_id(object, kClassIri));\n";
  out += "    for (const auto& [key, value] : object.items()) {\n";
  out += "      if (key == \"id\" || key == \"type\") continue;\n";
  bool first = true;
  for (const FieldSpec* f : by_json_key(type.all_fields)) {
    out += std::string(first ? "      if" : "      } else if") + " (key == " + string_literal(json_key(*f)) +
           ") {\n        detail::read(value, key, out->" + member(profile, *f) + ");\n";
    first = false;
  }
  if (first) {
    out += "      detail::unknown_member(key, kClassIri);\n";
  } else {
    out += "      } else {\n        detail::unknown_member(key, kClassIri);\n      }\n";
  }
  out += "    }\n    return out;\n  }\n";

  if (!type.own_fields.empty()) {
    out += "\n protected:\n";
    for (const auto& f : type.own_fields) {
      out += "  " + field_type(profile, f) + " " + member(profile, f) + ";\n";
    }
  }
  out += "};\n\ninline const bool k" + name + "Registered = detail::register_type<" + name +
         ">();\n\n}  // namespace know\n";
  return out;
}

}  // namespace

FileSet emit_cpp(const std::vector<TypeSpec>& ir, const TargetProfile& profile) {
  std::map<Iri, const TypeSpec*> by_iri;
  for (const auto& t : ir) by_iri.emplace(t.class_iri, &t);

  FileSet files;
  for (const auto& t : ir) add_file(files, profile.file_name(t.words), type_header(t, profile, by_iri));

  const auto types = by_type_name(ir, profile);
  std::string manifest(kRuntime);
  manifest += "\n#ifndef KNOW_HPP_RUNTIME_ONLY\n#ifndef KNOW_HPP_TYPES\n#define KNOW_HPP_TYPES\n\n";
  for (const TypeSpec* t : types) manifest += "#include \"" + profile.file_name(t->words) + "\"\n";
  if (!types.empty()) manifest += "\n";
  manifest += "namespace know {\n\n// Generated type names, sorted.\n";
  manifest += "inline constexpr std::array<std::string_view, " + std::to_string(types.size()) +
              "> kTypeNames = {";
  for (size_t i = 0; i < types.size(); ++i) {
    manifest += (i == 0 ? "\n    " : ",\n    ") + string_literal(profile.type_name(types[i]->words));
  }
  manifest += types.empty() ? "};\n" : ",\n};\n";
  manifest += "\n}  // namespace know\n\n#endif  // KNOW_HPP_TYPES\n#endif  // KNOW_HPP_RUNTIME_ONLY\n";
  add_file(files, "know.hpp", std::move(manifest));
  return files;
}

}  // namespace knowforge::emit::detail
