#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "knowforge/codegen/ir.hpp"
#include "knowforge/codegen/profile.hpp"
#include "knowforge/codegen/scalar.hpp"
#include "knowforge/rdf/turtle.hpp"
#include "knowforge/vocab/know.hpp"
#include "support/support.hpp"

namespace knowforge::codegen {
namespace {

using vocab::know;

TargetProfile profile(const std::string& name) {
  for (auto& p : bundled_profiles()) {
    if (p.name == name) return p;
  }
  throw std::runtime_error("no profile " + name);
}

const std::string kProfileJson = R"({
  "name": "toy", "language": "Toy", "construct": "record",
  "type_naming": "pascal", "field_naming": "lower_snake", "file_naming": "kebab",
  "file_extension": ".toy", "flatten_inheritance": true,
  "scalar_map": {"text": "S", "integer": "I", "decimal": "D", "boolean": "B",
                 "date": "S", "datetime": "S", "iri": "S"},
  "optional_template": "Maybe<{T}>", "collection_template": "List<{T}>",
  "emit_json": false, "emit_rdf": false, "preamble": "",
  "reserved_words": ["end"]
})";

TEST(Scalar, MapsXsdDatatypes) {
  EXPECT_EQ(map_scalar(rdf::ns::xsd("string")), ScalarKind::kText);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("integer")), ScalarKind::kInteger);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("decimal")), ScalarKind::kDecimal);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("boolean")), ScalarKind::kBoolean);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("date")), ScalarKind::kDate);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("dateTime")), ScalarKind::kDateTime);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("anyURI")), ScalarKind::kIri);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("int")), ScalarKind::kInteger);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("long")), ScalarKind::kInteger);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("double")), ScalarKind::kDecimal);
  EXPECT_EQ(map_scalar(rdf::ns::xsd("float")), ScalarKind::kDecimal);
  EXPECT_THROW(map_scalar(rdf::ns::xsd("hexBinary")), UnsupportedDatatype);
  EXPECT_THROW(map_scalar(rdf::Iri("https://example.org/integer")), UnsupportedDatatype);
}

TEST(Scalar, DatatypeForRoundTrips) {
  for (const auto kind : kAllScalarKinds) {
    EXPECT_EQ(map_scalar(datatype_for(kind)), kind);
    EXPECT_EQ(testing::kind_of_datatype(datatype_for(kind).str()), kind);
    EXPECT_EQ(parse_scalar_kind(to_string(kind)), kind);
  }
}

TEST(Profile, BundledSetHasTwelveTokens) {
  const auto profiles = bundled_profiles();
  std::vector<std::string> names;
  for (const auto& p : profiles) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"c", "cpp", "csharp", "dart", "go", "java", "js",
                                             "py", "rb", "rs", "swift", "ts"}));
  for (const auto& p : profiles) {
    EXPECT_EQ(p.scalar_map.size(), std::size(kAllScalarKinds)) << p.name;
    if (p.construct == Construct::kRecord) {
      EXPECT_TRUE(p.flatten_inheritance) << p.name;
    }
  }
  EXPECT_EQ(profile("rs").construct, Construct::kTraitRecord);
  EXPECT_EQ(profile("swift").construct, Construct::kInterfaceRecord);
  EXPECT_EQ(profile("py").construct, Construct::kDynamic);
  EXPECT_EQ(profile("c").construct, Construct::kRecord);
}

TEST(Profile, BundledMatchesProfilesDirectory) {
  const auto loaded = load_profiles(testing::source_path("profiles"));
  const auto bundled = bundled_profiles();
  ASSERT_EQ(loaded.size(), bundled.size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(loaded[i].name, bundled[i].name);
    EXPECT_EQ(loaded[i].preamble, bundled[i].preamble);
  }
}

TEST(Profile, ParseAndRender) {
  const auto p = parse_profile(kProfileJson, "toy.json");
  const WordSequence w({"place", "of", "worship"});
  EXPECT_EQ(p.type_name(w), "PlaceOfWorship");
  EXPECT_EQ(p.field_name(w), "place_of_worship");
  EXPECT_EQ(p.file_name(w), "place-of-worship.toy");
  EXPECT_EQ(p.field_name(WordSequence({"end"})), "end_");
  EXPECT_EQ(p.optional_of("I"), "Maybe<I>");
  EXPECT_EQ(p.collection_of("S"), "List<S>");
}

TEST(Profile, Invariants) {
  const auto broken = [](const std::string& from, const std::string& to) {
    std::string text = kProfileJson;
    text.replace(text.find(from), from.size(), to);
    return text;
  };
  EXPECT_THROW(parse_profile("[]", "x"), ProfileError);
  EXPECT_THROW(parse_profile("{", "x"), ProfileError);
  EXPECT_THROW(parse_profile(broken("Maybe<{T}>", "Maybe"), "x"), ProfileError);
  EXPECT_THROW(parse_profile(broken("List<{T}>", "{T}{T}"), "x"), ProfileError);
  EXPECT_THROW(parse_profile(broken("\"record\"", "\"blob\""), "x"), ProfileError);
  EXPECT_THROW(parse_profile(broken("\"flatten_inheritance\": true", "\"flatten_inheritance\": false"), "x"),
               ProfileError);
  EXPECT_THROW(parse_profile(broken("\"iri\": \"S\"", "\"uri\": \"S\""), "x"), ProfileError);
  EXPECT_THROW(parse_profile(broken("\"name\": \"toy\", ", ""), "x"), ProfileError);
  EXPECT_THROW(load_profiles(testing::source_path("no-such-dir")), ProfileError);
}

TEST(Ir, EmptyModelGivesNoTypes) {
  ontology::OntologyModel empty{vocab::base_iri(), {}, {}, {}};
  EXPECT_TRUE(build_ir(empty, profile("py")).empty());
}

TEST(Ir, FixtureTypesAndPerson) {
  const auto ir = build_ir(vocab::bundled_model(), profile("ts"));
  ASSERT_EQ(ir.size(), 17u);
  const auto person = std::find_if(ir.begin(), ir.end(), [](const TypeSpec& t) {
    return t.class_iri == know("Person");
  });
  ASSERT_NE(person, ir.end());
  EXPECT_EQ(person->own_fields.size(), 13u);
  EXPECT_EQ(person->all_fields, person->own_fields);
  std::map<std::string, const FieldSpec*> by_name;
  for (const auto& f : person->own_fields) by_name[f.words.words().front()] = &f;
  EXPECT_EQ(by_name.at("age")->cardinality, Cardinality::kOptionalSingle);
  EXPECT_EQ(by_name.at("age")->value, FieldValue(ScalarKind::kInteger));
  EXPECT_EQ(by_name.at("father")->cardinality, Cardinality::kOptionalSingle);
  EXPECT_EQ(by_name.at("father")->value, FieldValue(EntityReference{know("Person")}));
  EXPECT_EQ(by_name.at("brother")->cardinality, Cardinality::kMany);
  EXPECT_EQ(by_name.at("name")->value, FieldValue(ScalarKind::kText));
  EXPECT_EQ(person->doc, vocab::bundled_model().find_class(know("Person"))->comment);
}

TEST(Ir, TopologicalOrder) {
  const auto& model = vocab::bundled_model();
  for (const auto& name : {"py", "ts", "c"}) {
    const auto ir = build_ir(model, profile(name));
    std::map<Iri, size_t> position;
    for (size_t i = 0; i < ir.size(); ++i) position[ir[i].class_iri] = i;
    for (const auto& [iri, c] : model.classes) {
      for (const auto& super : c.superclasses) {
        if (model.find_class(super)) {
          EXPECT_LT(position.at(super), position.at(iri));
        }
      }
    }
  }
}

TEST(Ir, FlattenedFieldCountsMatchAncestorDomains) {
  const auto m = ontology::build_model(rdf::parse_turtle(R"(
    @prefix : <https://know.dev/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
    :Base a owl:Class . :Mid a owl:Class ; rdfs:subClassOf :Base .
    :Leaf a owl:Class ; rdfs:subClassOf :Mid .
    :a a owl:DatatypeProperty ; rdfs:domain :Base ; rdfs:range xsd:string .
    :b a owl:DatatypeProperty ; rdfs:domain :Base ; rdfs:range xsd:decimal .
    :c a owl:ObjectProperty ; rdfs:domain :Mid ; rdfs:range :Leaf .
    :d a owl:DatatypeProperty , owl:FunctionalProperty ; rdfs:domain :Leaf ; rdfs:range xsd:boolean .
  )"), vocab::base_iri());
  // Brute force: a class carries every property whose domain is it or one
  // of the classes reachable through rdfs:subClassOf.
  const auto expected = [&](const Iri& cls) {
    std::set<Iri> reach{cls};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& r : std::set<Iri>(reach)) {
        for (const auto& s : m.classes.at(r).superclasses) grew |= reach.insert(s).second;
      }
    }
    size_t n = 0;
    for (const auto& [iri, p] : m.properties) {
      n += std::any_of(p.domains.begin(), p.domains.end(), [&](const Iri& d) { return reach.count(d) > 0; });
    }
    return n;
  };
  const auto flat = build_ir(m, profile("c"));
  const auto nested = build_ir(m, profile("py"));
  ASSERT_EQ(flat.size(), 3u);
  for (size_t i = 0; i < flat.size(); ++i) {
    EXPECT_EQ(flat[i].all_fields.size(), expected(flat[i].class_iri)) << flat[i].class_iri.str();
    EXPECT_FALSE(flat[i].parent);
    EXPECT_EQ(nested[i].all_fields, flat[i].all_fields);
  }
  EXPECT_EQ(nested[2].parent, know("Mid"));
  EXPECT_EQ(nested[2].own_fields.size(), 1u);
  EXPECT_EQ(nested[2].all_fields.back().property_iri, know("d"));
}

TEST(Ir, UnsupportedDatatypeNamesTheProperty) {
  const auto m = ontology::build_model(rdf::parse_turtle(R"(
    @prefix : <https://know.dev/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
    :A a owl:Class .
    :blob a owl:DatatypeProperty ; rdfs:domain :A ; rdfs:range xsd:hexBinary .
  )"), vocab::base_iri());
  try {
    build_ir(m, profile("py"));
    FAIL() << "expected UnsupportedDatatype";
  } catch (const UnsupportedDatatype& e) {
    EXPECT_EQ(e.property(), know("blob"));
    EXPECT_EQ(e.datatype(), rdf::ns::xsd("hexBinary"));
  }
}

}  // namespace
}  // namespace knowforge::codegen
