// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

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

#ifndef KNOW_HPP_RUNTIME_ONLY
#ifndef KNOW_HPP_TYPES
#define KNOW_HPP_TYPES

#include "airport.hpp"
#include "appointment.hpp"
#include "birthday.hpp"
#include "cafe.hpp"
#include "event.hpp"
#include "group.hpp"
#include "holiday.hpp"
#include "hospital.hpp"
#include "hotel.hpp"
#include "landmark.hpp"
#include "meeting.hpp"
#include "organization.hpp"
#include "party.hpp"
#include "person.hpp"
#include "place.hpp"
#include "place_of_worship.hpp"
#include "restaurant.hpp"

namespace know {

// Generated type names, sorted.
inline constexpr std::array<std::string_view, 17> kTypeNames = {
    "Airport",
    "Appointment",
    "Birthday",
    "Cafe",
    "Event",
    "Group",
    "Holiday",
    "Hospital",
    "Hotel",
    "Landmark",
    "Meeting",
    "Organization",
    "Party",
    "Person",
    "Place",
    "PlaceOfWorship",
    "Restaurant",
};

}  // namespace know

#endif  // KNOW_HPP_TYPES
#endif  // KNOW_HPP_RUNTIME_ONLY
