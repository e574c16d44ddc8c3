#include <gtest/gtest.h>

#include <algorithm>
#include <regex>
#include <sstream>

#include "knowforge/codegen/ir.hpp"
#include "knowforge/emit/emit.hpp"
#include "knowforge/vocab/know.hpp"
#include "support/support.hpp"

namespace knowforge::emit {
namespace {

using codegen::TargetProfile;

const std::map<std::string, std::string> kManifests = {
    {"c", "know.h"},       {"cpp", "know.hpp"}, {"go", "know.go"},
    {"py", "__init__.py"}, {"rs", "lib.rs"},    {"ts", "index.ts"}};

TargetProfile profile(const std::string& name) {
  for (auto& p : codegen::bundled_profiles()) {
    if (p.name == name) return p;
  }
  throw std::runtime_error("no profile " + name);
}

FileSet fixture_files(const std::string& token) {
  const auto p = profile(token);
  return emit(codegen::build_ir(vocab::bundled_model(), p), p);
}

bool valid_utf8(const std::string& text) {
  for (size_t i = 0; i < text.size();) {
    const auto c = static_cast<unsigned char>(text[i]);
    size_t extra = 0;
    if (c < 0x80) extra = 0;
    else if ((c & 0xe0) == 0xc0 && c >= 0xc2) extra = 1;
    else if ((c & 0xf0) == 0xe0) extra = 2;
    else if ((c & 0xf8) == 0xf0 && c <= 0xf4) extra = 3;
    else return false;
    for (size_t k = 1; k <= extra; ++k) {
      if (i + k >= text.size() || (static_cast<unsigned char>(text[i + k]) & 0xc0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

// The quoted names listed right after the manifest's type-name marker.
std::vector<std::string> manifest_names(const std::string& manifest) {
  static const std::regex marker("TYPE_NAMES|kTypeNames|TypeNames = ");
  static const std::regex entry(R"re(^\s*"([A-Za-z0-9_]+)",?( \\)?$)re");
  std::istringstream in(manifest);
  std::string line;
  bool listing = false;
  std::vector<std::string> out;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!listing) {
      listing = std::regex_search(line, marker) && line.find('=') != std::string::npos;
      listing = listing || line.rfind("#define KNOW_TYPE_NAMES", 0) == 0;
    } else if (std::regex_match(line, m, entry)) {
      out.push_back(m[1]);
    } else {
      break;
    }
  }
  return out;
}

TEST(Emit, ImplementedTokens) {
  const auto tokens = implemented_tokens();
  EXPECT_EQ(std::vector<std::string>(tokens.begin(), tokens.end()),
            (std::vector<std::string>{"c", "cpp", "go", "py", "rs", "ts"}));
  EXPECT_TRUE(is_implemented("rs"));
  EXPECT_FALSE(is_implemented("java"));
}

TEST(Emit, DataOnlyProfilesAreNotImplemented) {
  for (const auto* token : {"csharp", "dart", "java", "js", "rb", "swift"}) {
    const auto p = profile(token);
    try {
      emit(codegen::build_ir(vocab::bundled_model(), p), p);
      FAIL() << token;
    } catch (const NotImplementedProfile& e) {
      EXPECT_EQ(e.token(), token);
      EXPECT_NE(std::string(e.what()).find("NOT_IMPLEMENTED"), std::string::npos);
    }
  }
}

TEST(Emit, EmptyIrGivesOnlyTheManifest) {
  for (const auto& [token, manifest] : kManifests) {
    const auto files = emit({}, profile(token));
    ASSERT_EQ(files.size(), 1u) << token;
    EXPECT_EQ(files.begin()->first, manifest);
    EXPECT_TRUE(manifest_names(files.begin()->second).empty()) << token;
  }
}

TEST(Emit, FixtureTreesMatchGoldens) {
  for (const auto& [token, manifest] : kManifests) {
    SCOPED_TRACE(token);
    const auto files = fixture_files(token);
    const auto golden = testing::read_tree(testing::source_path("golden/" + token));
    EXPECT_EQ(files.size(), 18u);
    ASSERT_EQ(files.size(), golden.size());
    for (const auto& [path, text] : files) {
      ASSERT_TRUE(golden.count(path)) << path;
      EXPECT_EQ(text, golden.at(path)) << path;
    }
  }
}

TEST(Emit, RepeatedRunsAreIdentical) {
  for (const auto& [token, manifest] : kManifests) {
    EXPECT_EQ(fixture_files(token), fixture_files(token)) << token;
  }
}

TEST(Emit, FilesArePreambledUtf8WithOneTrailingNewline) {
  for (const auto& [token, manifest] : kManifests) {
    const auto p = profile(token);
    for (const auto& [path, text] : fixture_files(token)) {
      SCOPED_TRACE(token + "/" + path);
      EXPECT_EQ(text.rfind(p.preamble, 0), 0u);
      ASSERT_GE(text.size(), 2u);
      EXPECT_EQ(text.back(), '\n');
      EXPECT_NE(text[text.size() - 2], '\n');
      EXPECT_TRUE(valid_utf8(text));
      EXPECT_EQ(text.find('\r'), std::string::npos);
    }
  }
}

TEST(Emit, ManifestListsTypeNamesSorted) {
  const auto ir = codegen::build_ir(vocab::bundled_model(), profile("py"));
  std::vector<std::string> expected;
  for (const auto& t : ir) {
    expected.push_back(codegen::apply_convention(t.words, codegen::NamingConvention::kPascal));
  }
  std::sort(expected.begin(), expected.end());
  for (const auto& [token, manifest] : kManifests) {
    EXPECT_EQ(manifest_names(fixture_files(token).at(manifest)), expected) << token;
  }
}

TEST(Emit, PersonCardinalityInPythonAndTypeScript) {
  const auto py = fixture_files("py").at("person.py");
  EXPECT_NE(py.find("    age: Optional[int]\n"), std::string::npos);
  EXPECT_NE(py.find("    father: Optional[str]\n"), std::string::npos);
  EXPECT_NE(py.find("    brother: List[str]\n"), std::string::npos);
  const auto ts = fixture_files("ts").at("person.ts");
  EXPECT_NE(ts.find("  age: number | null;\n"), std::string::npos);
  EXPECT_NE(ts.find("  father: string | null;\n"), std::string::npos);
  EXPECT_NE(ts.find("  brother: string[];\n"), std::string::npos);
}

TEST(Emit, ConstructsShowInOutput) {
  EXPECT_NE(fixture_files("rs").at("person.rs").find("pub trait Person: Entity"), std::string::npos);
  EXPECT_NE(fixture_files("ts").at("person.ts").find("export interface Person extends Entity"),
            std::string::npos);
  EXPECT_NE(fixture_files("cpp").at("cafe.hpp").find("class Cafe : public Place"), std::string::npos);
  EXPECT_NE(fixture_files("py").at("cafe.py").find("class Cafe(Place)"), std::string::npos);
  EXPECT_NE(fixture_files("c").at("person.h").find("typedef struct Person {"), std::string::npos);
}

TEST(WriteTree, ReplacesDirectoryContents) {
  testing::TempDir tmp;
  const auto dir = tmp.path() / "out";
  write_tree({{"old.txt", "old\n"}}, dir);
  write_tree({{"a.txt", "a\n"}, {"sub/b.txt", "b\n"}}, dir);
  EXPECT_EQ(testing::read_tree(dir),
            (std::map<std::string, std::string>{{"a.txt", "a\n"}, {"sub/b.txt", "b\n"}}));
  // Only the target itself remains next to it; no staging leftovers.
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(tmp.path()),
                          std::filesystem::directory_iterator()),
            1);
}

TEST(WriteTree, FailureLeavesTargetUntouched) {
  testing::TempDir tmp;
  const auto dir = tmp.path() / "out";
  write_tree({{"keep.txt", "keep\n"}}, dir);
  // "x" cannot be both a file and a directory.
  EXPECT_THROW(write_tree({{"x", "file\n"}, {"x/y", "nested\n"}}, dir),
               std::filesystem::filesystem_error);
  EXPECT_EQ(testing::read_tree(dir), (std::map<std::string, std::string>{{"keep.txt", "keep\n"}}));
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(tmp.path()),
                          std::filesystem::directory_iterator()),
            1);
}

}  // namespace
}  // namespace knowforge::emit
