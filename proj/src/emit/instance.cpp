#include "knowforge/emit/instance.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"
#include "knowforge/codegen/ir.hpp"
#include "knowforge/codegen/naming.hpp"
#include "knowforge/rdf/ntriples.hpp"

namespace knowforge::emit {

using codegen::Cardinality;
using codegen::FieldSpec;
using codegen::ScalarKind;

std::string json_quote(std::string_view text) {
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
  out += '"';
  return out;
}

std::string canonical_decimal(double value) {
  if (!std::isfinite(value)) throw InvalidValue("decimal value is not finite");
  if (value == 0) value = 0;  // drop the sign of -0
  char buf[512];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc()) throw InvalidValue("decimal value cannot be formatted");
  std::string out(buf, end);
  if (out.find('.') == std::string::npos) out += ".0";
  return out;
}

namespace {

std::int64_t parse_int64(std::string_view lexical) {
  std::string_view digits = lexical;
  if (digits.starts_with('+')) digits.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() ||
      digits.starts_with("+")) {
    throw InvalidValue("'" + std::string(lexical) + "' is not a 64-bit integer");
  }
  return value;
}

double parse_double(std::string_view lexical) {
  std::string_view digits = lexical;
  if (digits.starts_with('+')) digits.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InvalidValue("'" + std::string(lexical) + "' is not a decimal number");
  }
  return value;
}

}  // namespace

std::string canonical_lexical(ScalarKind kind, std::string_view lexical) {
  switch (kind) {
    case ScalarKind::kInteger: return std::to_string(parse_int64(lexical));
    case ScalarKind::kDecimal: return canonical_decimal(parse_double(lexical));
    case ScalarKind::kBoolean:
      if (lexical == "true" || lexical == "1") return "true";
      if (lexical == "false" || lexical == "0") return "false";
      throw InvalidValue("'" + std::string(lexical) + "' is not a boolean");
    case ScalarKind::kText:
    case ScalarKind::kDate:
    case ScalarKind::kDateTime:
    case ScalarKind::kIri: return std::string(lexical);
  }
  throw InvalidValue("unknown scalar kind");
}

namespace {

struct BoundField {
  FieldSpec spec;
  std::string json_key;
};

// Fields of the record's type keyed by property IRI.
std::map<Iri, BoundField> fields_of(const Iri& type, const ontology::OntologyModel& model) {
  std::map<Iri, BoundField> out;
  for (const auto& p : ontology::effective_properties(model, type)) {
    FieldSpec spec = codegen::make_field(model, p, type);
    std::string key = codegen::apply_convention(spec.words, codegen::NamingConvention::kCamel);
    out.emplace(p.iri, BoundField{std::move(spec), std::move(key)});
  }
  return out;
}

// Checks `values` against `field` and returns canonical lexical forms.
std::vector<std::string> checked_values(const BoundField& field,
                                        const std::vector<InstanceValue>& values) {
  const auto& spec = field.spec;
  if (spec.cardinality == Cardinality::kOptionalSingle && values.size() > 1) {
    throw CardinalityViolation("property " + spec.property_iri.str() + " is single-valued but has " +
                               std::to_string(values.size()) + " values");
  }
  std::vector<std::string> out;
  for (const auto& v : values) {
    if (spec.is_reference()) {
      const auto* ref = std::get_if<IriReference>(&v);
      if (ref == nullptr) {
        throw InvalidValue("property " + spec.property_iri.str() + " expects an IRI reference");
      }
      out.push_back(ref->iri.str());
    } else {
      const auto kind = std::get<ScalarKind>(spec.value);
      const auto* scalar = std::get_if<ScalarValue>(&v);
      if (scalar == nullptr || scalar->kind != kind) {
        throw InvalidValue("property " + spec.property_iri.str() + " expects a " +
                           std::string(codegen::to_string(kind)) + " value");
      }
      out.push_back(canonical_lexical(kind, scalar->lexical));
    }
  }
  return out;
}

bool is_json_string(const FieldSpec& spec) {
  if (spec.is_reference()) return true;
  const auto kind = std::get<ScalarKind>(spec.value);
  return kind != ScalarKind::kInteger && kind != ScalarKind::kDecimal &&
         kind != ScalarKind::kBoolean;
}

struct Member {
  std::string key;
  std::string rendered;
};

}  // namespace

std::string instance_to_json(const InstanceRecord& record, const ontology::OntologyModel& model) {
  const auto fields = fields_of(record.type, model);
  std::vector<Member> members;
  for (const auto& [property, values] : record.values) {
    const auto it = fields.find(property);
    if (it == fields.end()) {
      throw UnknownProperty("property " + property.str() + " is not defined for " +
                            record.type.str());
    }
    const auto lexicals = checked_values(it->second, values);
    if (lexicals.empty()) continue;
    const bool quoted = is_json_string(it->second.spec);
    const auto render = [&](const std::string& lex) { return quoted ? json_quote(lex) : lex; };
    std::string rendered;
    if (it->second.spec.cardinality == Cardinality::kOptionalSingle) {
      rendered = render(lexicals.front());
    } else {
      rendered = "[\n";
      for (size_t i = 0; i < lexicals.size(); ++i) {
        rendered += "    " + render(lexicals[i]);
        rendered += i + 1 < lexicals.size() ? ",\n" : "\n";
      }
      rendered += "  ]";
    }
    members.push_back(Member{it->second.json_key, std::move(rendered)});
  }
  std::sort(members.begin(), members.end(),
            [](const Member& a, const Member& b) { return a.key < b.key; });

  std::string out = "{\n  \"id\": " + json_quote(record.id.str()) + ",\n  \"type\": " +
                    json_quote(record.type.str());
  for (const auto& m : members) out += ",\n  " + json_quote(m.key) + ": " + m.rendered;
  out += "\n}\n";
  return out;
}

namespace {

InstanceValue decode_value(const FieldSpec& spec, const nlohmann::json& v) {
  const auto fail = [&](const char* expected) {
    return InvalidValue("property " + spec.property_iri.str() + " expects " + expected);
  };
  if (spec.is_reference()) {
    if (!v.is_string()) throw fail("an IRI string");
    try {
      return IriReference{Iri(v.get<std::string>())};
    } catch (const std::invalid_argument& e) {
      throw InvalidValue(e.what());
    }
  }
  const auto kind = std::get<ScalarKind>(spec.value);
  switch (kind) {
    case ScalarKind::kInteger:
      if (v.is_number_integer() && !(v.is_number_unsigned() &&
                                     v.get<std::uint64_t>() > static_cast<std::uint64_t>(
                                                                  std::numeric_limits<std::int64_t>::max()))) {
        return ScalarValue{kind, std::to_string(v.get<std::int64_t>())};
      }
      throw fail("a 64-bit integer");
    case ScalarKind::kDecimal:
      if (!v.is_number()) throw fail("a number");
      return ScalarValue{kind, canonical_decimal(v.get<double>())};
    case ScalarKind::kBoolean:
      if (!v.is_boolean()) throw fail("a boolean");
      return ScalarValue{kind, v.get<bool>() ? "true" : "false"};
    case ScalarKind::kText:
    case ScalarKind::kDate:
    case ScalarKind::kDateTime:
    case ScalarKind::kIri:
      if (!v.is_string()) throw fail("a string");
      return ScalarValue{kind, v.get<std::string>()};
  }
  throw fail("a known value kind");
}

}  // namespace

InstanceRecord instance_from_json(std::string_view json, const ontology::OntologyModel& model) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidValue(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidValue("instance must be a JSON object");
  for (const char* key : {"id", "type"}) {
    if (!doc.contains(key) || !doc.at(key).is_string()) {
      throw InvalidValue(std::string("instance needs a string \"") + key + "\" member");
    }
  }
  InstanceRecord record{Iri(doc.at("id").get<std::string>()),
                        Iri(doc.at("type").get<std::string>()), {}};
  std::map<std::string, const BoundField*> by_key;
  const auto fields = fields_of(record.type, model);
  for (const auto& [iri, field] : fields) by_key.emplace(field.json_key, &field);

  for (const auto& [key, value] : doc.items()) {
    if (key == "id" || key == "type") continue;
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      throw UnknownProperty("member \"" + key + "\" is not a property of " + record.type.str());
    }
    const FieldSpec& spec = it->second->spec;
    std::vector<InstanceValue> values;
    if (spec.cardinality == Cardinality::kOptionalSingle) {
      if (value.is_array()) {
        throw CardinalityViolation("member \"" + key + "\" is single-valued");
      }
      if (!value.is_null()) values.push_back(decode_value(spec, value));
    } else {
      if (!value.is_array()) throw InvalidValue("member \"" + key + "\" must be an array");
      for (const auto& item : value) values.push_back(decode_value(spec, item));
    }
    if (!values.empty()) record.values.emplace(spec.property_iri, std::move(values));
  }
  return record;
}

std::string instance_to_triples(const InstanceRecord& record,
                                const ontology::OntologyModel& model) {
  const auto fields = fields_of(record.type, model);
  rdf::Graph graph;
  graph.triples.push_back({record.id, rdf::ns::rdf("type"), record.type});
  for (const auto& [property, values] : record.values) {
    const auto it = fields.find(property);
    if (it == fields.end()) {
      throw UnknownProperty("property " + property.str() + " is not defined for " +
                            record.type.str());
    }
    const FieldSpec& spec = it->second.spec;
    for (const auto& lexical : checked_values(it->second, values)) {
      if (spec.is_reference()) {
        graph.triples.push_back({record.id, property, Iri(lexical)});
      } else {
        const auto kind = std::get<ScalarKind>(spec.value);
        graph.triples.push_back(
            {record.id, property, rdf::make_literal(lexical, codegen::datatype_for(kind))});
      }
    }
  }
  return rdf::to_ntriples(graph);
}

}  // namespace knowforge::emit
