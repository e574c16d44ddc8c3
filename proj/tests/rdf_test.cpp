#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "knowforge/rdf/ntriples.hpp"
#include "knowforge/rdf/turtle.hpp"
#include "support/support.hpp"

namespace knowforge::rdf {
namespace {

using testing::read_file;
using testing::source_path;

const std::string kEx = "http://example.org/";

Iri ex(const std::string& local) { return Iri(kEx + local); }

TEST(Turtle, PrefixedTripleWithTypeShorthand) {
  const auto g = parse_turtle("@prefix ex: <http://example.org/> .\nex:a a ex:B .\n");
  ASSERT_EQ(g.triples.size(), 1u);
  EXPECT_EQ(g.triples[0], (Triple{ex("a"), ns::rdf("type"), ex("B")}));
  EXPECT_EQ(g.prefixes.at("ex"), Iri(kEx));
}

TEST(Turtle, SparqlStyleDirectives) {
  const auto g = parse_turtle("PREFIX ex: <http://example.org/>\nBASE <http://b.org/x/>\n<y> ex:p ex:o .");
  ASSERT_EQ(g.triples.size(), 1u);
  EXPECT_EQ(std::get<Iri>(g.triples[0].subject), Iri("http://b.org/x/y"));
}

TEST(Turtle, PredicateAndObjectLists) {
  const auto g = parse_turtle(
      "@prefix ex: <http://example.org/> .\n"
      "ex:s ex:p ex:o1 , ex:o2 ; ex:q ex:o3 ; .\n");
  EXPECT_EQ(g.triples.size(), 3u);
}

TEST(Turtle, LiteralForms) {
  const auto g = parse_turtle(
      "@prefix ex: <http://example.org/> .\n"
      "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      "ex:s ex:p \"plain\", \"hi\"@en-GB, \"5\"^^xsd:integer, 42, -1.5, 1e3, true,\n"
      "  'single', \"\"\"multi\nline\"\"\", \"esc\\t\\u00e9\" .\n");
  std::vector<Literal> lits;
  for (const auto& t : g.triples) lits.push_back(std::get<Literal>(t.object));
  ASSERT_EQ(lits.size(), 10u);
  EXPECT_EQ(lits[0], make_literal("plain", ns::xsd("string")));
  EXPECT_EQ(lits[1], make_lang_literal("hi", "en-GB"));
  EXPECT_EQ(lits[2], make_literal("5", ns::xsd("integer")));
  EXPECT_EQ(lits[3], make_literal("42", ns::xsd("integer")));
  EXPECT_EQ(lits[4], make_literal("-1.5", ns::xsd("decimal")));
  EXPECT_EQ(lits[5], make_literal("1e3", ns::xsd("double")));
  EXPECT_EQ(lits[6], make_literal("true", ns::xsd("boolean")));
  EXPECT_EQ(lits[7].lexical, "single");
  EXPECT_EQ(lits[8].lexical, "multi\nline");
  EXPECT_EQ(lits[9].lexical, "esc\t\xc3\xa9");
}

TEST(Turtle, AnonymousBlankNodesAvoidDocumentLabels) {
  const auto g = parse_turtle(
      "@prefix ex: <http://example.org/> .\n"
      "_:b0 ex:p [ ex:q ex:o ] .\n");
  ASSERT_EQ(g.triples.size(), 2u);
  std::set<std::string> labels;
  for (const auto& t : g.triples) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label);
  }
  EXPECT_EQ(labels, (std::set<std::string>{"b0", "b1"}));
}

TEST(Turtle, CollectionsBecomeRdfLists) {
  const auto g = parse_turtle("@prefix ex: <http://example.org/> .\nex:s ex:p (ex:a ex:b) .\n");
  // ex:s ex:p _:l0; two first/rest pairs.
  EXPECT_EQ(g.triples.size(), 5u);
  const auto nil = std::count_if(g.triples.begin(), g.triples.end(), [](const Triple& t) {
    return t.object == Term(ns::rdf("nil"));
  });
  EXPECT_EQ(nil, 1);
  const auto empty = parse_turtle("@prefix ex: <http://example.org/> .\nex:s ex:p () .\n");
  ASSERT_EQ(empty.triples.size(), 1u);
  EXPECT_EQ(empty.triples[0].object, Term(ns::rdf("nil")));
}

TEST(Turtle, CommentsAndEmptyDocument) {
  EXPECT_TRUE(parse_turtle("").triples.empty());
  EXPECT_TRUE(parse_turtle("# nothing here\n   \n").triples.empty());
}

TEST(Turtle, RelativeIriNeedsBase) {
  EXPECT_THROW(parse_turtle("<a> <b> <c> ."), RelativeIriWithoutBase);
  const auto g = parse_turtle("<a> <b> <c> .", Iri("http://x.org/d/e"));
  EXPECT_EQ(std::get<Iri>(g.triples[0].subject), Iri("http://x.org/d/a"));
}

TEST(Turtle, UndefinedPrefixReportsItsPosition) {
  try {
    parse_turtle("@prefix ex: <http://example.org/> .\nex:a  nope:b ex:c .\n");
    FAIL() << "expected UndefinedPrefix";
  } catch (const UndefinedPrefix& e) {
    EXPECT_EQ(e.label(), "nope");
    EXPECT_EQ(e.location(), (SourceLocation{2, 7}));
  }
}

TEST(Turtle, SyntaxErrorsCarryLocation) {
  try {
    parse_turtle("@prefix ex: <http://example.org/> .\nex:a ex:b\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.location().line, 3);
  }
  EXPECT_THROW(parse_turtle("<http://a/> <http://b/> \"open"), SyntaxError);
  EXPECT_THROW(parse_turtle("<http://a/> <http://b/> <http://c/>"), SyntaxError);
  EXPECT_THROW(parse_turtle("\"lit\" <http://b/> <http://c/> ."), SyntaxError);
}

TEST(ResolveIri, Rfc3986Examples) {
  const std::string base = "http://a/b/c/d;p?q";
  EXPECT_EQ(resolve_iri(base, "g"), "http://a/b/c/g");
  EXPECT_EQ(resolve_iri(base, "./g"), "http://a/b/c/g");
  EXPECT_EQ(resolve_iri(base, "g/"), "http://a/b/c/g/");
  EXPECT_EQ(resolve_iri(base, "/g"), "http://a/g");
  EXPECT_EQ(resolve_iri(base, "//g"), "http://g");
  EXPECT_EQ(resolve_iri(base, "?y"), "http://a/b/c/d;p?y");
  EXPECT_EQ(resolve_iri(base, "#s"), "http://a/b/c/d;p?q#s");
  EXPECT_EQ(resolve_iri(base, ""), "http://a/b/c/d;p?q");
  EXPECT_EQ(resolve_iri(base, ".."), "http://a/b/");
  EXPECT_EQ(resolve_iri(base, "../../g"), "http://a/g");
  EXPECT_EQ(resolve_iri(base, "../../../g"), "http://a/g");
  EXPECT_EQ(resolve_iri(base, "g:h"), "g:h");
  EXPECT_TRUE(is_absolute_iri("urn:x"));
  EXPECT_FALSE(is_absolute_iri("a/b"));
}

TEST(NTriples, TermFormatting) {
  EXPECT_EQ(format_term(ex("a")), "<http://example.org/a>");
  EXPECT_EQ(format_term(BlankNode{"x"}), "_:x");
  EXPECT_EQ(format_term(make_literal("v", ns::xsd("string"))), "\"v\"");
  EXPECT_EQ(format_term(make_literal("3", ns::xsd("integer"))),
            "\"3\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  EXPECT_EQ(format_term(make_lang_literal("hi", "en")), "\"hi\"@en");
}

TEST(NTriples, Escapes) {
  EXPECT_EQ(escape_literal("a\"b\\c\nd\re\tf\bg\fh"), "a\\\"b\\\\c\\nd\\re\\tf\\bg\\fh");
  EXPECT_EQ(escape_literal(std::string("\x01\x1f\x7f", 3)), "\\u0001\\u001F\\u007F");
  EXPECT_EQ(escape_literal("\xc3\xa9"), "\xc3\xa9");
}

TEST(NTriples, LinesSortedAndDuplicatesKept) {
  Graph g;
  g.triples.push_back({ex("b"), ex("p"), ex("o")});
  g.triples.push_back({ex("a"), ex("p"), ex("o")});
  g.triples.push_back({ex("b"), ex("p"), ex("o")});
  EXPECT_EQ(to_ntriples(g),
            "<http://example.org/a> <http://example.org/p> <http://example.org/o> .\n"
            "<http://example.org/b> <http://example.org/p> <http://example.org/o> .\n"
            "<http://example.org/b> <http://example.org/p> <http://example.org/o> .\n");
  EXPECT_EQ(to_ntriples(Graph{}), "");
}

TEST(NTriples, FixtureMatchesCommittedGolden) {
  const auto g = parse_turtle(read_file(source_path("vocab/know.ttl")));
  EXPECT_EQ(to_ntriples(g), read_file(source_path("vocab/know.nt")));
}

TEST(NTriples, ParseSerializeParseFixpoint) {
  std::mt19937_64 rng(20240229);
  for (int trial = 0; trial < 150; ++trial) {
    const std::string doc = testing::random_turtle_document(rng);
    SCOPED_TRACE(doc);
    const Graph first = parse_turtle(doc);
    EXPECT_EQ(first.triples.size(), testing::count_statements(doc));
    const std::string nt = to_ntriples(first);
    const Graph second = parse_turtle(nt);
    EXPECT_EQ(to_ntriples(second), nt);
    auto a = first.triples;
    auto b = second.triples;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace knowforge::rdf
