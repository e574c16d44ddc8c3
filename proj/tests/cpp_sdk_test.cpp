// Exercises the committed C++ SDK (golden/cpp) against the reference codec.
#include <gtest/gtest.h>

#include <random>

// A type header first: it must pull in the runtime on its own.
#include "person.hpp"
#include "know.hpp"

#include "knowforge/emit/instance.hpp"
#include "knowforge/vocab/know.hpp"
#include "smoke_cases.hpp"
#include "support/support.hpp"

namespace {

using knowforge::emit::instance_from_json;
using knowforge::emit::instance_to_json;
using knowforge::emit::instance_to_triples;
namespace testing_support = knowforge::testing;

TEST(CppSdk, RandomRecordsRoundTrip) {
  const auto& model = knowforge::vocab::bundled_model();
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const auto record = testing_support::random_record(model, rng);
    const std::string reference = instance_to_json(record, model);
    SCOPED_TRACE(reference);

    const auto entity = know::from_json(reference);
    ASSERT_NE(entity, nullptr);
    EXPECT_EQ(entity->class_iri(), record.type.str());
    EXPECT_EQ(entity->id(), record.id.str());
    const std::string encoded = entity->to_json();
    EXPECT_EQ(encoded, reference);
    EXPECT_EQ(instance_from_json(encoded, model), record);

    const std::string triples = entity->to_triples();
    EXPECT_EQ(triples, instance_to_triples(record, model));
    EXPECT_EQ(testing_support::unordered(testing_support::regroup_triples(triples)),
              testing_support::unordered(record));
  }
}

TEST(CppSdk, TypedConstructionMatchesReference) {
  know::Person alice("https://example.org/know-data/alice");
  alice.set_age(30);
  alice.set_brother({"https://example.org/know-data/bob", "https://example.org/know-data/dave"});
  const auto& model = knowforge::vocab::bundled_model();
  EXPECT_EQ(alice.to_json(), instance_to_json(knowforge::tools::alice(), model));
  EXPECT_EQ(alice.to_triples(), instance_to_triples(knowforge::tools::alice(), model));
  const auto decoded = know::Person::from_json(alice.to_json());
  EXPECT_EQ(decoded.age(), 30);
  EXPECT_EQ(decoded.brother().size(), 2u);
  EXPECT_FALSE(decoded.father().has_value());
}

TEST(CppSdk, CommittedCases) {
  for (const auto& c : knowforge::tools::smoke_cases()) {
    SCOPED_TRACE(c.name);
    if (c.name.rfind("reject_", 0) == 0) {
      EXPECT_THROW(know::from_json(c.json), know::Error);
      continue;
    }
    const auto entity = know::from_json(c.json);
    EXPECT_EQ(entity->to_json(), c.json);
    EXPECT_EQ(entity->to_triples(), c.triples);
  }
}

TEST(CppSdk, DecodeErrors) {
  const std::string head =
      "{\"id\": \"https://example.org/know-data/e\", \"type\": \"https://know.dev/Person\"";
  EXPECT_THROW(know::from_json(head + ", \"favoriteColor\": 1}"), know::UnknownProperty);
  EXPECT_THROW(know::from_json(head + ", \"father\": [\"https://x/y\"]}"), know::CardinalityViolation);
  EXPECT_THROW(know::from_json(head + ", \"age\": \"old\"}"), know::InvalidValue);
  EXPECT_THROW(know::from_json("{\"id\": \"https://e/x\", \"type\": \"https://know.dev/Nope\"}"),
               know::UnknownType);
  EXPECT_THROW(know::from_json("not json"), know::Error);
}

TEST(CppSdk, ManifestNamesAllTypes) {
  EXPECT_EQ(know::kTypeNames.size(), 17u);
  EXPECT_TRUE(std::is_sorted(know::kTypeNames.begin(), know::kTypeNames.end()));
  const std::string cafe = know::from_json(
      "{\"id\": \"https://e/c\", \"type\": \"https://know.dev/Cafe\"}")->to_json();
  EXPECT_EQ(cafe, "{\n  \"id\": \"https://e/c\",\n  \"type\": \"https://know.dev/Cafe\"\n}\n");
}

}  // namespace
