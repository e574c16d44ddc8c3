#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "json.hpp"
#include "knowforge/codegen/naming.hpp"
#include "knowforge/emit/instance.hpp"
#include "knowforge/rdf/turtle.hpp"
#include "knowforge/vocab/know.hpp"
#include "smoke_cases.hpp"
#include "support/support.hpp"

namespace knowforge::emit {
namespace {

using codegen::ScalarKind;
using tools::data_iri;
using vocab::know;

const ontology::OntologyModel& every_kind_model() {
  static const auto model = ontology::build_model(rdf::parse_turtle(R"(
    @prefix : <https://know.dev/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
    :Thing a owl:Class .
    :Gadget a owl:Class ; rdfs:subClassOf :Thing .
    :label a owl:DatatypeProperty , owl:FunctionalProperty ; rdfs:domain :Thing ; rdfs:range xsd:string .
    :count a owl:DatatypeProperty , owl:FunctionalProperty ; rdfs:domain :Thing ; rdfs:range xsd:integer .
    :score a owl:DatatypeProperty ; rdfs:domain :Thing ; rdfs:range xsd:decimal .
    :isOpen a owl:DatatypeProperty , owl:FunctionalProperty ; rdfs:domain :Gadget ; rdfs:range xsd:boolean .
    :madeOn a owl:DatatypeProperty ; rdfs:domain :Gadget ; rdfs:range xsd:date .
    :seenAt a owl:DatatypeProperty ; rdfs:domain :Gadget ; rdfs:range xsd:dateTime .
    :homePage a owl:DatatypeProperty ; rdfs:domain :Thing ; rdfs:range xsd:anyURI .
    :partOf a owl:ObjectProperty ; rdfs:domain :Thing ; rdfs:range :Thing .
    :owner a owl:ObjectProperty , owl:FunctionalProperty ; rdfs:domain :Gadget ; rdfs:range :Thing .
  )"), vocab::base_iri());
  return model;
}

// Formats a record with nlohmann::ordered_json: id and type first, the other
// members sorted by camel-case key.
std::string oracle_json(const InstanceRecord& r, const ontology::OntologyModel& model) {
  nlohmann::ordered_json doc;
  doc["id"] = r.id.str();
  doc["type"] = r.type.str();
  std::map<std::string, nlohmann::ordered_json> members;
  for (const auto& [property, values] : r.values) {
    const auto* p = model.find_property(property);
    const std::string key =
        codegen::apply_convention(codegen::split_words(p->local_name), codegen::NamingConvention::kCamel);
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& v : values) {
      if (const auto* ref = std::get_if<IriReference>(&v)) {
        items.push_back(ref->iri.str());
        continue;
      }
      const auto& s = std::get<ScalarValue>(v);
      switch (s.kind) {
        case ScalarKind::kInteger: items.push_back(std::stoll(s.lexical)); break;
        case ScalarKind::kDecimal: items.push_back(std::stod(s.lexical)); break;
        case ScalarKind::kBoolean: items.push_back(s.lexical == "true"); break;
        default: items.push_back(s.lexical);
      }
    }
    members[key] = p->functional ? items.at(0) : items;
  }
  for (auto& [key, value] : members) doc[key] = value;
  return doc.dump(2) + "\n";
}

TEST(Alice, FourCanonicalTriples) {
  const std::string nt = instance_to_triples(tools::alice(), vocab::bundled_model());
  EXPECT_EQ(nt,
            "<https://example.org/know-data/alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
            "<https://know.dev/Person> .\n"
            "<https://example.org/know-data/alice> <https://know.dev/age> "
            "\"30\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
            "<https://example.org/know-data/alice> <https://know.dev/brother> "
            "<https://example.org/know-data/bob> .\n"
            "<https://example.org/know-data/alice> <https://know.dev/brother> "
            "<https://example.org/know-data/dave> .\n");
}

TEST(Alice, Json) {
  EXPECT_EQ(instance_to_json(tools::alice(), vocab::bundled_model()),
            "{\n"
            "  \"id\": \"https://example.org/know-data/alice\",\n"
            "  \"type\": \"https://know.dev/Person\",\n"
            "  \"age\": 30,\n"
            "  \"brother\": [\n"
            "    \"https://example.org/know-data/bob\",\n"
            "    \"https://example.org/know-data/dave\"\n"
            "  ]\n"
            "}\n");
}

TEST(InstanceJson, EmptyRecordHasOnlyIdAndType) {
  const InstanceRecord r{data_iri("x"), know("Cafe"), {}};
  EXPECT_EQ(instance_to_json(r, vocab::bundled_model()),
            "{\n  \"id\": \"https://example.org/know-data/x\",\n  \"type\": \"https://know.dev/Cafe\"\n}\n");
  EXPECT_EQ(instance_to_triples(r, vocab::bundled_model()),
            "<https://example.org/know-data/x> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
            "<https://know.dev/Cafe> .\n");
}

TEST(InstanceJson, MatchesIndependentFormatter) {
  std::mt19937_64 rng(4242);
  for (const auto* model : {&vocab::bundled_model(), &every_kind_model()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = testing::random_record(*model, rng);
      ASSERT_EQ(instance_to_json(r, *model), oracle_json(r, *model));
    }
  }
}

TEST(InstanceJson, RoundTrip) {
  std::mt19937_64 rng(77);
  for (const auto* model : {&vocab::bundled_model(), &every_kind_model()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = testing::random_record(*model, rng);
      const auto json = instance_to_json(r, *model);
      ASSERT_EQ(instance_from_json(json, *model), r) << json;
    }
  }
}

TEST(InstanceTriples, RegroupToTheSameRecord) {
  std::mt19937_64 rng(5);
  for (const auto* model : {&vocab::bundled_model(), &every_kind_model()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = testing::random_record(*model, rng);
      const auto nt = instance_to_triples(r, *model);
      ASSERT_EQ(testing::unordered(testing::regroup_triples(nt)), testing::unordered(r)) << nt;
    }
  }
}

TEST(InstanceJson, DecodeRejectsBadDocuments) {
  const auto& m = vocab::bundled_model();
  const std::string head = "{\"id\": \"https://example.org/know-data/e\", \"type\": \"https://know.dev/Person\"";
  EXPECT_THROW(instance_from_json(head + ", \"favoriteColor\": \"green\"}", m), UnknownProperty);
  EXPECT_THROW(instance_from_json(head + ", \"age\": [1]}", m), CardinalityViolation);
  EXPECT_THROW(instance_from_json(head + ", \"age\": \"30\"}", m), InvalidValue);
  EXPECT_THROW(instance_from_json(head + ", \"age\": 1.5}", m), InvalidValue);
  EXPECT_THROW(instance_from_json(head + ", \"age\": 9223372036854775808}", m), InvalidValue);
  EXPECT_THROW(instance_from_json(head + ", \"name\": 3}", m), InvalidValue);
  EXPECT_THROW(instance_from_json(head + ", \"brother\": \"https://x/y\"}", m), InvalidValue);
  EXPECT_THROW(instance_from_json(head + ", \"brother\": [\"relative\"]}", m), InvalidValue);
  EXPECT_THROW(instance_from_json(head, m), InvalidValue);
  EXPECT_THROW(instance_from_json("[]", m), InvalidValue);
  EXPECT_THROW(instance_from_json("{\"type\": \"https://know.dev/Person\"}", m), InvalidValue);
  EXPECT_THROW(instance_from_json("{\"id\": \"https://e/x\", \"type\": \"https://know.dev/Nope\"}", m),
               ontology::UnknownClass);
}

TEST(InstanceJson, NullAndEmptyMeanAbsent) {
  const auto& m = vocab::bundled_model();
  const auto r = instance_from_json(
      "{\"id\": \"https://example.org/know-data/e\", \"type\": \"https://know.dev/Person\","
      " \"age\": null, \"brother\": []}",
      m);
  EXPECT_TRUE(r.values.empty());
}

TEST(InstanceJson, EncodeChecksValues) {
  const auto& m = vocab::bundled_model();
  InstanceRecord r{data_iri("e"), know("Person"), {}};
  r.values[know("age")] = {ScalarValue{ScalarKind::kInteger, "1"}, ScalarValue{ScalarKind::kInteger, "2"}};
  EXPECT_THROW(instance_to_json(r, m), CardinalityViolation);
  EXPECT_THROW(instance_to_triples(r, m), CardinalityViolation);
  r.values[know("age")] = {ScalarValue{ScalarKind::kText, "1"}};
  EXPECT_THROW(instance_to_json(r, m), InvalidValue);
  r.values[know("age")] = {IriReference{data_iri("n")}};
  EXPECT_THROW(instance_to_json(r, m), InvalidValue);
  r.values[know("age")] = {ScalarValue{ScalarKind::kInteger, "thirty"}};
  EXPECT_THROW(instance_to_json(r, m), InvalidValue);
  r.values.clear();
  r.values[know("brother")] = {ScalarValue{ScalarKind::kText, "bob"}};
  EXPECT_THROW(instance_to_json(r, m), InvalidValue);
  r.values.clear();
  r.values[know("nope")] = {ScalarValue{ScalarKind::kText, "x"}};
  EXPECT_THROW(instance_to_json(r, m), UnknownProperty);
  EXPECT_THROW(instance_to_triples(r, m), UnknownProperty);
}

TEST(Canonical, Decimal) {
  EXPECT_EQ(canonical_decimal(12.5), "12.5");
  EXPECT_EQ(canonical_decimal(3), "3.0");
  EXPECT_EQ(canonical_decimal(-0.0), "0.0");
  EXPECT_EQ(canonical_decimal(0.1), "0.1");
  EXPECT_EQ(canonical_decimal(1e21), "1000000000000000000000.0");
  EXPECT_EQ(canonical_decimal(1e-7), "0.0000001");
  EXPECT_THROW(canonical_decimal(std::nan("")), InvalidValue);
  EXPECT_THROW(canonical_decimal(std::numeric_limits<double>::infinity()), InvalidValue);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng);
    EXPECT_EQ(std::stod(canonical_decimal(v)), v);
  }
}

TEST(Canonical, Lexical) {
  EXPECT_EQ(canonical_lexical(ScalarKind::kInteger, "+007"), "7");
  EXPECT_EQ(canonical_lexical(ScalarKind::kInteger, "-0"), "0");
  EXPECT_THROW(canonical_lexical(ScalarKind::kInteger, "1.0"), InvalidValue);
  EXPECT_THROW(canonical_lexical(ScalarKind::kInteger, ""), InvalidValue);
  EXPECT_THROW(canonical_lexical(ScalarKind::kInteger, "99999999999999999999"), InvalidValue);
  EXPECT_EQ(canonical_lexical(ScalarKind::kDecimal, "1.50"), "1.5");
  EXPECT_EQ(canonical_lexical(ScalarKind::kBoolean, "1"), "true");
  EXPECT_EQ(canonical_lexical(ScalarKind::kBoolean, "false"), "false");
  EXPECT_THROW(canonical_lexical(ScalarKind::kBoolean, "yes"), InvalidValue);
  EXPECT_EQ(canonical_lexical(ScalarKind::kText, " as is "), " as is ");
}

TEST(Canonical, JsonQuote) {
  EXPECT_EQ(json_quote("a\"b\\c"), "\"a\\\"b\\\\c\"");
  EXPECT_EQ(json_quote("\b\f\n\r\t"), "\"\\b\\f\\n\\r\\t\"");
  EXPECT_EQ(json_quote(std::string("\x01\x1f\x7f", 3)), "\"\\u0001\\u001f\x7f\"");
  for (int c = 0; c < 0x80; ++c) {
    const std::string s(1, static_cast<char>(c));
    EXPECT_EQ(json_quote(s), nlohmann::json(s).dump()) << c;
  }
}

TEST(SmokeCases, CommittedFilesMatchTheReferenceCodec) {
  const auto committed = testing::read_tree(testing::source_path("smoke/cases"));
  std::map<std::string, std::string> expected;
  for (const auto& c : tools::smoke_cases()) {
    expected[c.name + ".json"] = c.json;
    if (!c.triples.empty()) expected[c.name + ".nt"] = c.triples;
  }
  EXPECT_EQ(committed, expected);
  const auto& m = vocab::bundled_model();
  for (const auto& c : tools::smoke_cases()) {
    if (c.name.rfind("reject_", 0) == 0) {
      EXPECT_THROW(instance_from_json(c.json, m), InstanceError) << c.name;
    } else {
      EXPECT_EQ(instance_to_json(instance_from_json(c.json, m), m), c.json) << c.name;
    }
  }
}

}  // namespace
}  // namespace knowforge::emit
