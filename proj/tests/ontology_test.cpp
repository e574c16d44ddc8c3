#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "knowforge/ontology/diagnostic.hpp"
#include "knowforge/ontology/model.hpp"
#include "knowforge/rdf/turtle.hpp"
#include "knowforge/vocab/know.hpp"
#include "support/support.hpp"

namespace knowforge::ontology {
namespace {

using vocab::know;

const std::string kPrefixes =
    "@prefix : <https://know.dev/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

OntologyModel model_of(const std::string& body) {
  return build_model(rdf::parse_turtle(kPrefixes + body), vocab::base_iri());
}

std::vector<std::string> codes(const std::vector<Diagnostic>& diagnostics) {
  std::vector<std::string> out;
  for (const auto& d : diagnostics) out.push_back(d.code);
  return out;
}

std::set<std::string> local_names(const std::vector<Iri>& iris) {
  std::set<std::string> out;
  for (const auto& i : iris) out.insert(local_name_of(i, vocab::base_iri()));
  return out;
}

TEST(Fixture, ValidatesCleanly) {
  EXPECT_TRUE(validate(vocab::bundled_model()).empty());
}

TEST(Fixture, ClassAndPropertyCounts) {
  const auto& model = vocab::bundled_model();
  EXPECT_EQ(model.classes.size(), 17u);
  EXPECT_EQ(model.properties.size(), 13u);
  std::vector<Iri> top;
  for (const auto& [iri, c] : model.classes) {
    if (c.superclasses.empty()) top.push_back(iri);
  }
  EXPECT_EQ(local_names(top),
            (std::set<std::string>{"Person", "Group", "Organization", "Place", "Event"}));
  std::vector<Iri> props;
  for (const auto& [iri, p] : model.properties) props.push_back(iri);
  EXPECT_EQ(local_names(props),
            (std::set<std::string>{"age", "name", "father", "mother", "brother", "sister",
                                   "uncle", "aunt", "nephew", "niece", "parent", "child",
                                   "sibling"}));
}

TEST(Fixture, PropertyDetails) {
  const auto& model = vocab::bundled_model();
  const auto* age = model.find_property(know("age"));
  ASSERT_NE(age, nullptr);
  EXPECT_TRUE(age->functional);
  EXPECT_EQ(age->ranges, std::vector<Iri>{rdf::ns::xsd("integer")});
  EXPECT_EQ(age->domains, std::vector<Iri>{know("Person")});
  EXPECT_FALSE(model.find_property(know("brother"))->functional);
  EXPECT_TRUE(model.find_property(know("father"))->functional);
  const auto* parent = model.find_property(know("parent"));
  const auto* child = model.find_property(know("child"));
  ASSERT_TRUE(parent->inverse_of && child->inverse_of);
  EXPECT_EQ(*parent->inverse_of, know("child"));
  EXPECT_EQ(*child->inverse_of, know("parent"));
  const auto* cafe = model.find_class(know("Cafe"));
  ASSERT_NE(cafe, nullptr);
  EXPECT_EQ(cafe->superclasses, std::vector<Iri>{know("Place")});
  EXPECT_EQ(cafe->label, "Cafe");
}

TEST(Ancestors, NearestFirst) {
  const auto m = model_of(
      ":A a owl:Class . :B a owl:Class ; rdfs:subClassOf :A .\n"
      ":C a owl:Class ; rdfs:subClassOf :B , <http://other.org/X> .\n");
  EXPECT_EQ(ancestors(m, know("C")), (std::vector<Iri>{know("B"), know("A")}));
  EXPECT_TRUE(ancestors(m, know("A")).empty());
  EXPECT_THROW(ancestors(m, know("Nope")), UnknownClass);
}

TEST(EffectiveProperties, OwnBeforeInherited) {
  const auto m = model_of(
      ":A a owl:Class . :B a owl:Class ; rdfs:subClassOf :A .\n"
      ":zeta a owl:DatatypeProperty ; rdfs:domain :A ; rdfs:range xsd:string .\n"
      ":alpha a owl:DatatypeProperty ; rdfs:domain :A ; rdfs:range xsd:string .\n"
      ":own a owl:DatatypeProperty ; rdfs:domain :B ; rdfs:range xsd:string .\n");
  std::vector<std::string> names;
  for (const auto& p : effective_properties(m, know("B"))) names.push_back(p.local_name);
  EXPECT_EQ(names, (std::vector<std::string>{"own", "alpha", "zeta"}));
  EXPECT_THROW(effective_properties(m, know("Z")), UnknownClass);
}

TEST(Validate, Cycle) {
  const auto d = validate(model_of(
      ":A a owl:Class ; rdfs:subClassOf :B . :B a owl:Class ; rdfs:subClassOf :A .\n"));
  EXPECT_EQ(codes(d), std::vector<std::string>{"CYCLE"});
  EXPECT_TRUE(has_errors(d));
  EXPECT_EQ(format_diagnostic(d[0]).rfind("error CYCLE https://know.dev/", 0), 0u);
}

TEST(Validate, MissingDomainIsAWarning) {
  const auto d = validate(model_of(":A a owl:Class . :p a owl:DatatypeProperty ; rdfs:range xsd:string .\n"));
  EXPECT_EQ(codes(d), std::vector<std::string>{"NO_DOMAIN"});
  EXPECT_FALSE(has_errors(d));
  EXPECT_EQ(d[0].severity, Severity::kWarning);
}

TEST(Validate, DanglingReferences) {
  const auto d = validate(model_of(
      ":A a owl:Class .\n"
      ":p a owl:ObjectProperty ; rdfs:domain :Missing ; rdfs:range :A .\n"
      ":q a owl:ObjectProperty ; rdfs:domain :A ; rdfs:range :Gone .\n"
      ":r a owl:ObjectProperty ; rdfs:domain :A ; rdfs:range :A ; owl:inverseOf :nothing .\n"
      ":s a owl:ObjectProperty ; rdfs:domain :A ; rdfs:range :A ; rdfs:subPropertyOf :zilch .\n"));
  const auto c = codes(d);
  for (const char* expected :
       {"DANGLING_DOMAIN", "DANGLING_RANGE", "DANGLING_INVERSE", "DANGLING_SUPERPROP"}) {
    EXPECT_NE(std::find(c.begin(), c.end(), expected), c.end()) << expected;
  }
}

TEST(Validate, NamingAndDuplicates) {
  const auto warn = validate(model_of(":my_thing a owl:Class .\n"));
  EXPECT_EQ(codes(warn), std::vector<std::string>{"NAMING"});
  EXPECT_FALSE(has_errors(warn));
  const auto dup = validate(model_of(
      ":Thing a owl:Class . <http://other.org/Thing> a owl:Class .\n"));
  EXPECT_EQ(codes(dup), std::vector<std::string>{"DUPLICATE_LOCAL_NAME"});
}

TEST(ModelProperties, SubclassGraphIsAcyclic) {
  const auto& model = vocab::bundled_model();
  // Repeatedly peel classes whose superclasses are all peeled.
  std::set<Iri> done;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [iri, c] : model.classes) {
      if (done.count(iri)) continue;
      const bool ready = std::all_of(c.superclasses.begin(), c.superclasses.end(), [&](const Iri& s) {
        return done.count(s) || model.find_class(s) == nullptr;
      });
      if (ready) {
        done.insert(iri);
        progress = true;
      }
    }
  }
  EXPECT_EQ(done.size(), model.classes.size());
}

TEST(ModelProperties, EffectivePropertiesMonotoneAlongSubclassEdges) {
  const auto& model = vocab::bundled_model();
  for (const auto& [iri, c] : model.classes) {
    std::set<Iri> sub;
    for (const auto& p : effective_properties(model, iri)) sub.insert(p.iri);
    for (const auto& super : c.superclasses) {
      if (model.find_class(super) == nullptr) continue;
      for (const auto& p : effective_properties(model, super)) {
        EXPECT_TRUE(sub.count(p.iri)) << iri.str() << " lacks " << p.iri.str();
      }
    }
  }
}

TEST(ModelProperties, InvariantUnderTriplePermutation) {
  const auto graph = rdf::parse_turtle(vocab::bundled_source());
  const auto reference = build_model(graph, vocab::base_iri());
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    auto shuffled = graph;
    std::shuffle(shuffled.triples.begin(), shuffled.triples.end(), rng);
    ASSERT_EQ(build_model(shuffled, vocab::base_iri()), reference) << "trial " << trial;
  }
}

}  // namespace
}  // namespace knowforge::ontology
