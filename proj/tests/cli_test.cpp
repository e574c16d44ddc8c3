#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "knowforge/cli/cli.hpp"
#include "support/support.hpp"

namespace knowforge::cli {
namespace {

using testing::read_file;
using testing::read_tree;
using testing::source_path;
using testing::TempDir;
using testing::write_file;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

const std::string kFixture = source_path("vocab/know.ttl").string();
const std::string kPrefixes =
    "@prefix : <https://know.dev/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliParse, FixturePrintsGoldenNTriples) {
  const auto r = invoke({"parse", kFixture});
  EXPECT_EQ(r.status, kSuccess);
  EXPECT_EQ(r.out, read_file(source_path("vocab/know.nt")));
}

TEST(CliParse, EmptyFileMissingFileAndSyntaxError) {
  TempDir tmp;
  write_file(tmp.path() / "empty.ttl", "");
  const auto empty = invoke({"parse", (tmp.path() / "empty.ttl").string()});
  EXPECT_EQ(empty.status, kSuccess);
  EXPECT_EQ(empty.out, "");

  EXPECT_EQ(invoke({"parse", (tmp.path() / "absent.ttl").string()}).status, kUsage);

  const auto bad_path = (tmp.path() / "bad.ttl").string();
  write_file(bad_path, "@prefix : <https://know.dev/> .\n:a :b nope:c .\n");
  const auto bad = invoke({"parse", bad_path});
  EXPECT_EQ(bad.status, kFailure);
  EXPECT_EQ(bad.out, "");
  EXPECT_EQ(bad.err.rfind(bad_path + ":2:7: ", 0), 0u) << bad.err;
}

TEST(CliValidate, FixtureHasNoDiagnostics) {
  const auto r = invoke({"validate", kFixture});
  EXPECT_EQ(r.status, kSuccess);
  EXPECT_EQ(r.out, "");
}

TEST(CliValidate, CycleIsAnError) {
  TempDir tmp;
  const auto path = (tmp.path() / "cycle.ttl").string();
  write_file(path, kPrefixes + ":A a owl:Class ; rdfs:subClassOf :B .\n:B a owl:Class ; rdfs:subClassOf :A .\n");
  const auto r = invoke({"validate", path});
  EXPECT_EQ(r.status, kFailure);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].rfind("error CYCLE ", 0), 0u);
}

TEST(CliValidate, MissingDomainIsAWarning) {
  TempDir tmp;
  const auto path = (tmp.path() / "nodomain.ttl").string();
  write_file(path, kPrefixes + ":A a owl:Class .\n:p a owl:DatatypeProperty ; rdfs:range xsd:string .\n");
  const auto r = invoke({"validate", path});
  EXPECT_EQ(r.status, kSuccess);
  EXPECT_EQ(r.out.rfind("warning NO_DOMAIN https://know.dev/p: ", 0), 0u) << r.out;
}

TEST(CliValidate, BaseMustBeAbsolute) {
  EXPECT_EQ(invoke({"validate", kFixture, "--base", "relative/"}).status, kUsage);
  EXPECT_EQ(invoke({"validate", kFixture, "--base", "https://know.dev/"}).status, kSuccess);
}

TEST(CliGenerate, PyAndTsMatchGoldensAndRunsAgree) {
  TempDir a;
  TempDir b;
  const auto first = invoke({"generate", kFixture, "--target", "py", "--target", "ts", "--out",
                             a.path().string()});
  const auto second = invoke({"generate", kFixture, "-t", "ts", "-t", "py", "-o", b.path().string()});
  ASSERT_EQ(first.status, kSuccess) << first.err;
  ASSERT_EQ(second.status, kSuccess) << second.err;
  EXPECT_EQ(read_tree(a.path()), read_tree(b.path()));
  for (const std::string token : {"py", "ts"}) {
    EXPECT_EQ(read_tree(a.path() / token), read_tree(source_path("golden/" + token))) << token;
  }
  const auto written = lines_of(first.out);
  EXPECT_EQ(written.size(), 36u);
  EXPECT_TRUE(std::is_sorted(written.begin(), written.end()));
  EXPECT_EQ(written.front(), (a.path() / "py" / "__init__.py").string());
}

TEST(CliGenerate, AllExpandsToImplementedProfiles) {
  TempDir tmp;
  const auto r = invoke({"generate", kFixture, "-t", "all", "-o", tmp.path().string()});
  ASSERT_EQ(r.status, kSuccess) << r.err;
  const auto tree = read_tree(tmp.path());
  EXPECT_EQ(tree.size(), 6u * 18u);
  EXPECT_EQ(tree, read_tree(source_path("golden")));
}

TEST(CliGenerate, UnknownAndUnimplementedTargets) {
  TempDir tmp;
  const auto cobol = invoke({"generate", kFixture, "-t", "cobol", "-o", tmp.path().string()});
  EXPECT_EQ(cobol.status, kUsage);
  EXPECT_NE(cobol.err.find("cobol"), std::string::npos);
  EXPECT_NE(cobol.err.find("py"), std::string::npos);
  const auto java = invoke({"generate", kFixture, "-t", "java", "-o", tmp.path().string()});
  EXPECT_EQ(java.status, kFailure);
  EXPECT_NE(java.err.find("NOT_IMPLEMENTED"), std::string::npos);
  EXPECT_TRUE(read_tree(tmp.path()).empty());
}

TEST(CliGenerate, InvalidModelWritesNothing) {
  TempDir tmp;
  const auto path = (tmp.path() / "cycle.ttl").string();
  write_file(path, kPrefixes + ":A a owl:Class ; rdfs:subClassOf :B .\n:B a owl:Class ; rdfs:subClassOf :A .\n");
  const auto out = tmp.path() / "out";
  const auto r = invoke({"generate", path, "-t", "py", "-o", out.string()});
  EXPECT_EQ(r.status, kFailure);
  EXPECT_NE(r.err.find("CYCLE"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(out));
}

TEST(CliGenerate, RequiresTargetAndOut) {
  TempDir tmp;
  EXPECT_EQ(invoke({"generate", kFixture, "-o", tmp.path().string()}).status, kUsage);
  EXPECT_EQ(invoke({"generate", kFixture, "-t", "py"}).status, kUsage);
}

TEST(CliTargets, TwelveSortedRows) {
  const auto r = invoke({"targets"});
  EXPECT_EQ(r.status, kSuccess);
  const auto rows = lines_of(r.out);
  EXPECT_EQ(rows.size(), 12u);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
  EXPECT_NE(std::find(rows.begin(), rows.end(), "rs  trait_record  implemented"), rows.end());
  EXPECT_NE(std::find(rows.begin(), rows.end(), "swift  interface_record  not-implemented"), rows.end());
  EXPECT_NE(std::find(rows.begin(), rows.end(), "py  dynamic  implemented"), rows.end());
  EXPECT_EQ(invoke({"targets"}).out, r.out);
}

TEST(CliUsage, BadInvocations) {
  EXPECT_EQ(invoke({}).status, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).status, kUsage);
  EXPECT_EQ(invoke({"parse"}).status, kUsage);
  EXPECT_EQ(invoke({"--help"}).status, kSuccess);
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) {
    setenv(name, value.c_str(), 1);
  }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

TEST(CliProfiles, EnvironmentSelectsProfileDirectory) {
  TempDir tmp;
  const auto dir = tmp.path() / "profiles";
  std::string py = read_file(source_path("profiles/py.json"));
  const std::string old_preamble = "# Code generated by knowforge";
  py.replace(py.find(old_preamble), old_preamble.size(), "# Local build of knowforge");
  write_file(dir / "py.json", py);
  ScopedEnv env("KNOWFORGE_PROFILES", dir.string());

  const auto targets = invoke({"targets"});
  EXPECT_EQ(targets.out, "py  dynamic  implemented\n");
  const auto out = tmp.path() / "out";
  const auto r = invoke({"generate", kFixture, "-t", "py", "-o", out.string()});
  ASSERT_EQ(r.status, kSuccess) << r.err;
  EXPECT_EQ(read_file(out / "py" / "person.py").rfind("# Local build of knowforge", 0), 0u);
  EXPECT_EQ(invoke({"generate", kFixture, "-t", "ts", "-o", out.string()}).status, kUsage);
}

}  // namespace
}  // namespace knowforge::cli
