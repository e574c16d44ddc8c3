#include <gtest/gtest.h>

#include <random>

#include "knowforge/codegen/naming.hpp"
#include "knowforge/vocab/know.hpp"
#include "support/support.hpp"

namespace knowforge::codegen {
namespace {

std::vector<std::string> words(std::string_view name) { return split_words(name).words(); }

using Words = std::vector<std::string>;

TEST(SplitWords, Examples) {
  EXPECT_EQ(words("PlaceOfWorship"), (Words{"place", "of", "worship"}));
  EXPECT_EQ(words("place_of_worship"), (Words{"place", "of", "worship"}));
  EXPECT_EQ(words("place-of-worship"), (Words{"place", "of", "worship"}));
  EXPECT_EQ(words("placeOfWorship"), (Words{"place", "of", "worship"}));
  EXPECT_EQ(words("IRIValue"), (Words{"iri", "value"}));
  EXPECT_EQ(words("HTTPServer2Go"), (Words{"http", "server2", "go"}));
  EXPECT_EQ(words("age"), (Words{"age"}));
  EXPECT_EQ(words("A_B"), (Words{"a", "b"}));
}

TEST(SplitWords, RejectsUnusableNames) {
  EXPECT_THROW(split_words(""), InvalidIdentifier);
  EXPECT_THROW(split_words("___"), InvalidIdentifier);
  EXPECT_THROW(split_words("2fast"), InvalidIdentifier);
  EXPECT_THROW(split_words("caf\xc3\xa9"), InvalidIdentifier);
  EXPECT_THROW(WordSequence({}), InvalidIdentifier);
  EXPECT_THROW(WordSequence({"Upper"}), InvalidIdentifier);
}

TEST(ApplyConvention, Examples) {
  const WordSequence w({"place", "of", "worship"});
  EXPECT_EQ(apply_convention(w, NamingConvention::kLowerSnake), "place_of_worship");
  EXPECT_EQ(apply_convention(w, NamingConvention::kCamel), "placeOfWorship");
  EXPECT_EQ(apply_convention(w, NamingConvention::kPascal), "PlaceOfWorship");
  EXPECT_EQ(apply_convention(w, NamingConvention::kKebab), "place-of-worship");
  EXPECT_EQ(apply_convention(WordSequence({"a", "b"}), NamingConvention::kPascal), "A_B");
}

TEST(ApplyConvention, ParseAndPrintConventions) {
  for (const auto c : kAllConventions) EXPECT_EQ(parse_convention(to_string(c)), c);
  EXPECT_FALSE(parse_convention("SCREAMING"));
}

TEST(NamingProperties, PascalOfSplitIsIdentityOnFixtureClasses) {
  const auto& model = vocab::bundled_model();
  ASSERT_FALSE(model.classes.empty());
  for (const auto& [iri, c] : model.classes) {
    EXPECT_EQ(apply_convention(split_words(c.local_name), NamingConvention::kPascal), c.local_name);
  }
}

TEST(NamingProperties, SplitOfRenderIsIdentity) {
  std::mt19937_64 rng(7);
  int cases = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const WordSequence w(testing::random_words(rng));
    for (const auto c : kAllConventions) {
      const auto rendered = apply_convention(w, c);
      ASSERT_EQ(split_words(rendered), w) << rendered << " in " << to_string(c);
      ++cases;
    }
  }
  EXPECT_GE(cases, 1000);
}

}  // namespace
}  // namespace knowforge::codegen
