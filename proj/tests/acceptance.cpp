// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failures (0 when everything holds).
#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

// The committed C++ SDK; the include path points at golden/cpp.
#include "know.hpp"

#include "knowforge/cli/cli.hpp"
#include "knowforge/codegen/naming.hpp"
#include "knowforge/emit/emit.hpp"
#include "knowforge/emit/instance.hpp"
#include "knowforge/ontology/diagnostic.hpp"
#include "knowforge/rdf/ntriples.hpp"
#include "knowforge/rdf/turtle.hpp"
#include "knowforge/vocab/know.hpp"
#include "smoke_cases.hpp"
#include "json.hpp"
#include "support/support.hpp"

namespace {

using namespace knowforge;
using Failure = std::optional<std::string>;

struct Cli {
  int status;
  std::string out;
  std::string err;
};

Cli cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture() { return testing::source_path("vocab/know.ttl").string(); }

Failure fixture_integrity() {
  const auto r = cli({"validate", fixture()});
  if (r.status != 0) return "validate exited " + std::to_string(r.status);
  if (!r.out.empty()) return "validate printed diagnostics:\n" + r.out;
  const auto& model = vocab::bundled_model();
  std::set<std::string> top;
  for (const auto& [iri, c] : model.classes) {
    if (c.superclasses.empty()) top.insert(c.local_name);
  }
  if (top != std::set<std::string>{"Person", "Group", "Organization", "Place", "Event"}) {
    return "unexpected top-level classes";
  }
  if (model.classes.size() != 17) return std::to_string(model.classes.size()) + " classes";
  std::set<std::string> props;
  for (const auto& [iri, p] : model.properties) props.insert(p.local_name);
  const std::set<std::string> expected{"father", "mother", "brother", "sister", "uncle",
                                       "aunt",   "nephew", "niece",   "parent", "child",
                                       "sibling", "age",   "name"};
  if (props != expected) return std::to_string(props.size()) + " properties, not the expected 13";
  return std::nullopt;
}

Failure parser_canonicalization() {
  const auto r = cli({"parse", fixture()});
  if (r.status != 0) return "parse exited " + std::to_string(r.status);
  if (r.out != testing::read_file(testing::source_path("vocab/know.nt"))) {
    return "parse output differs from vocab/know.nt";
  }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 120; ++trial) {
    const auto doc = testing::random_turtle_document(rng);
    const auto first = rdf::parse_turtle(doc);
    if (first.triples.size() != testing::count_statements(doc)) return "triple count mismatch:\n" + doc;
    const auto nt = rdf::to_ntriples(first);
    if (rdf::to_ntriples(rdf::parse_turtle(nt)) != nt) return "not a fixpoint:\n" + doc;
  }
  return std::nullopt;
}

Failure naming_properties() {
  using namespace codegen;
  for (const auto& [iri, c] : vocab::bundled_model().classes) {
    if (apply_convention(split_words(c.local_name), NamingConvention::kPascal) != c.local_name) {
      return "pascal(split(" + c.local_name + ")) differs";
    }
  }
  std::mt19937_64 rng(2);
  int cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const WordSequence w(testing::random_words(rng));
    for (const auto c : kAllConventions) {
      const auto rendered = apply_convention(w, c);
      if (split_words(rendered) != w) return "split(render) differs for " + rendered;
      ++cases;
    }
  }
  return cases >= 1000 ? std::nullopt : Failure("too few cases");
}

Failure model_properties() {
  const auto& model = vocab::bundled_model();
  std::set<rdf::Iri> done;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [iri, c] : model.classes) {
      if (done.count(iri)) continue;
      if (std::all_of(c.superclasses.begin(), c.superclasses.end(), [&](const rdf::Iri& s) {
            return done.count(s) || !model.find_class(s);
          })) {
        grew = done.insert(iri).second;
      }
    }
  }
  if (done.size() != model.classes.size()) return "subclass graph has a cycle";
  for (const auto& [iri, c] : model.classes) {
    std::set<rdf::Iri> own;
    for (const auto& p : ontology::effective_properties(model, iri)) own.insert(p.iri);
    for (const auto& s : c.superclasses) {
      if (!model.find_class(s)) continue;
      for (const auto& p : ontology::effective_properties(model, s)) {
        if (!own.count(p.iri)) return iri.str() + " loses " + p.iri.str();
      }
    }
  }
  const auto graph = rdf::parse_turtle(vocab::bundled_source());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto shuffled = graph;
    std::shuffle(shuffled.triples.begin(), shuffled.triples.end(), rng);
    if (!(ontology::build_model(shuffled, vocab::base_iri()) == model)) {
      return "model changed under shuffle " + std::to_string(trial);
    }
  }
  return std::nullopt;
}

Failure generation_determinism() {
  testing::TempDir a;
  testing::TempDir b;
  std::vector<std::string> first{"generate", fixture(), "-o", a.path().string()};
  std::vector<std::string> second{"generate", fixture(), "-o", b.path().string()};
  for (const auto token : emit::implemented_tokens()) {
    first.insert(first.end(), {"-t", std::string(token)});
    second.insert(second.begin() + 2, {"--target", std::string(token)});
  }
  const auto r1 = cli(first);
  const auto r2 = cli(second);
  if (r1.status != 0 || r2.status != 0) return "generate failed: " + r1.err + r2.err;
  if (r1.out.empty()) return "generate listed no files";
  for (const auto token : emit::implemented_tokens()) {
    const std::string t(token);
    const auto one = testing::read_tree(a.path() / t);
    if (one.empty()) return "no files for " + t;
    if (one != testing::read_tree(b.path() / t)) return "runs differ for " + t;
    if (one != testing::read_tree(testing::source_path("golden/" + t))) return t + " differs from golden";
  }
  const auto py = testing::read_file(a.path() / "py" / "person.py");
  for (const char* line : {"    age: Optional[int]\n", "    father: Optional[str]\n", "    brother: List[str]\n"}) {
    if (py.find(line) == std::string::npos) return std::string("py Person lacks '") + line + "'";
  }
  const auto ts = testing::read_file(a.path() / "ts" / "person.ts");
  for (const char* line : {"  age: number | null;\n", "  father: string | null;\n", "  brother: string[];\n"}) {
    if (ts.find(line) == std::string::npos) return std::string("ts Person lacks '") + line + "'";
  }
  return std::nullopt;
}

Failure self_hosted_round_trip() {
  const auto& model = vocab::bundled_model();
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto record = testing::random_record(model, rng);
    const auto json = emit::instance_to_json(record, model);
    try {
      const auto entity = know::from_json(json);
      if (entity->to_json() != json) return "SDK re-encoding differs:\n" + json;
      if (!(emit::instance_from_json(entity->to_json(), model) == record)) return "record changed:\n" + json;
      const auto regrouped = testing::regroup_triples(entity->to_triples());
      if (!(testing::unordered(regrouped) == testing::unordered(record))) {
        return "triples regroup to a different record:\n" + entity->to_triples();
      }
    } catch (const know::Error& e) {
      return std::string("SDK rejected a valid record: ") + e.what() + "\n" + json;
    }
  }
  return std::nullopt;
}

Failure reference_serialization() {
  const auto& model = vocab::bundled_model();
  const auto nt = emit::instance_to_triples(tools::alice(), model);
  if (std::count(nt.begin(), nt.end(), '\n') != 4) return "Alice has not 4 lines:\n" + nt;
  if (rdf::to_ntriples(rdf::parse_turtle(nt)) != nt) return "Alice triples are not canonical";
  // nlohmann's dump(2) uses the same layout: two-space indent, ": ", and
  // one element per line.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto record = testing::random_record(model, rng);
    nlohmann::ordered_json doc;
    doc["id"] = record.id.str();
    doc["type"] = record.type.str();
    std::map<std::string, nlohmann::ordered_json> members;
    for (const auto& [iri, values] : record.values) {
      const auto* p = model.find_property(iri);
      auto items = nlohmann::ordered_json::array();
      for (const auto& v : values) {
        if (const auto* ref = std::get_if<emit::IriReference>(&v)) {
          items.push_back(ref->iri.str());
        } else if (const auto& s = std::get<emit::ScalarValue>(v); s.kind == codegen::ScalarKind::kInteger) {
          items.push_back(std::stoll(s.lexical));
        } else {
          items.push_back(s.lexical);
        }
      }
      members[codegen::apply_convention(codegen::split_words(p->local_name),
                                        codegen::NamingConvention::kCamel)] =
          p->functional ? items.at(0) : items;
    }
    for (auto& [key, value] : members) doc[key] = value;
    const auto expected = doc.dump(2) + "\n";
    const auto actual = emit::instance_to_json(record, model);
    if (actual != expected) return "JSON differs from the independent formatter:\n" + actual;
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Failure()>>> criteria = {
      {"fixture integrity", fixture_integrity},
      {"parser canonicalization", parser_canonicalization},
      {"naming properties", naming_properties},
      {"model properties", model_properties},
      {"generation determinism and goldens", generation_determinism},
      {"self-hosted round-trip (cpp)", self_hosted_round_trip},
      {"reference serialization oracle", reference_serialization},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Failure failure;
    try {
      failure = check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++failures;
      std::cout << "FAIL " << name << ": " << *failure << "\n";
    } else {
      std::cout << "PASS " << name << "\n";
    }
  }
  return failures;
}
