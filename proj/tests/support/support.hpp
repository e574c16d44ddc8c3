#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "knowforge/emit/instance.hpp"
#include "knowforge/ontology/model.hpp"

namespace knowforge::testing {

std::filesystem::path source_path(const std::string& relative);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

// Every regular file under `root`, keyed by relative path with '/' separators.
std::map<std::string, std::string> read_tree(const std::filesystem::path& root);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// A random Turtle document over a restricted subset: prefixed names, `a`,
// ';' and ',' lists, blank node labels and escaped literals.
std::string random_turtle_document(std::mt19937_64& rng);

// Statements in a document from random_turtle_document, counted by scanning
// characters rather than parsing.
size_t count_statements(const std::string& doc);

// One to five words matching [a-z][a-z0-9]*.
std::vector<std::string> random_words(std::mt19937_64& rng);

// Scalar kind of an XSD datatype, from a table kept apart from the library's.
codegen::ScalarKind kind_of_datatype(const std::string& datatype_iri);

// Random printable-or-not UTF-8 text, including quotes, backslashes and
// control characters.
std::string random_text(std::mt19937_64& rng);

// A record of a random class of `model` with a random subset of its
// properties filled in. Values are already in canonical lexical form.
emit::InstanceRecord random_record(const ontology::OntologyModel& model, std::mt19937_64& rng);

// Brute-force regrouping of canonical N-Triples into a record: splits each
// line by hand, takes the rdf:type line as the type and every other line as
// one value. Literal datatypes pick the scalar kind; IRIs become references.
emit::InstanceRecord regroup_triples(const std::string& ntriples);

// RDF has no value order; sorts every value list.
emit::InstanceRecord unordered(emit::InstanceRecord record);

// Readable form for test failure messages.
std::string describe(const emit::InstanceRecord& record);

}  // namespace knowforge::testing

namespace knowforge::emit {
inline void PrintTo(const InstanceRecord& record, std::ostream* os) {
  *os << testing::describe(record);
}
}  // namespace knowforge::emit
