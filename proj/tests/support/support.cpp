#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "knowforge/rdf/term.hpp"

#ifndef KNOWFORGE_SOURCE_DIR
#error KNOWFORGE_SOURCE_DIR must be defined
#endif

namespace knowforge::testing {

namespace fs = std::filesystem;
using codegen::ScalarKind;
using emit::InstanceRecord;
using emit::InstanceValue;
using emit::IriReference;
using emit::ScalarValue;

fs::path source_path(const std::string& relative) {
  return fs::path(KNOWFORGE_SOURCE_DIR) / relative;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  if (!fs::exists(root)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    out.emplace(fs::relative(entry.path(), root).generic_string(), read_file(entry.path()));
  }
  return out;
}

TempDir::TempDir() {
  std::random_device rd;
  const auto base = fs::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    path_ = base / ("knowforge-test-" + std::to_string(rd()));
    if (fs::create_directory(path_)) return;
  }
  throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

ScalarKind kind_of_datatype(const std::string& datatype_iri) {
  static const std::map<std::string, ScalarKind> table = {
      {"http://www.w3.org/2001/XMLSchema#string", ScalarKind::kText},
      {"http://www.w3.org/2001/XMLSchema#integer", ScalarKind::kInteger},
      {"http://www.w3.org/2001/XMLSchema#decimal", ScalarKind::kDecimal},
      {"http://www.w3.org/2001/XMLSchema#boolean", ScalarKind::kBoolean},
      {"http://www.w3.org/2001/XMLSchema#date", ScalarKind::kDate},
      {"http://www.w3.org/2001/XMLSchema#dateTime", ScalarKind::kDateTime},
      {"http://www.w3.org/2001/XMLSchema#anyURI", ScalarKind::kIri},
  };
  return table.at(datatype_iri);
}

std::string random_text(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {
      "a", "Z", "0", " ", "\"", "\\", "\n", "\t", "\r", "\b", "\f", "\x01", "\x1f", "\x7f",
      "/", "<", ">", "'", "\xc3\xa9", "\xe4\xb8\xad", "\xf0\x9f\x98\x80", "name", "x y"};
  std::uniform_int_distribution<size_t> length(0, 12);
  std::uniform_int_distribution<size_t> pick(0, pieces.size() - 1);
  std::string out;
  for (size_t n = length(rng); n > 0; --n) out += pieces[pick(rng)];
  return out;
}

namespace {

std::string random_lexical(ScalarKind kind, std::mt19937_64& rng) {
  switch (kind) {
    case ScalarKind::kInteger: {
      std::uniform_int_distribution<int> shape(0, 3);
      switch (shape(rng)) {
        case 0: return "0";
        case 1: return std::to_string(std::uniform_int_distribution<int>(-200, 200)(rng));
        case 2: return std::to_string(std::numeric_limits<std::int64_t>::min());
        default: return std::to_string(std::uniform_int_distribution<std::int64_t>()(rng));
      }
    }
    case ScalarKind::kDecimal: {
      const auto whole = std::uniform_int_distribution<int>(-5000, 5000)(rng);
      const auto eighths = std::uniform_int_distribution<int>(0, 7)(rng);
      return emit::canonical_decimal(whole + eighths / 8.0);
    }
    case ScalarKind::kBoolean: return std::bernoulli_distribution()(rng) ? "true" : "false";
    case ScalarKind::kDate: return "2024-02-29";
    case ScalarKind::kDateTime: return "2024-02-29T12:30:00Z";
    case ScalarKind::kIri: return "https://example.org/x/" + std::to_string(rng() % 100);
    case ScalarKind::kText: return random_text(rng);
  }
  return {};
}

rdf::Iri random_data_iri(std::mt19937_64& rng) {
  return rdf::Iri("https://example.org/know-data/p" + std::to_string(rng() % 1000));
}

}  // namespace

InstanceRecord random_record(const ontology::OntologyModel& model, std::mt19937_64& rng) {
  std::vector<rdf::Iri> classes;
  for (const auto& [iri, c] : model.classes) classes.push_back(iri);
  // Most fixture classes have no properties; weight toward ones that do.
  std::vector<rdf::Iri> with_fields;
  for (const auto& iri : classes) {
    if (!ontology::effective_properties(model, iri).empty()) with_fields.push_back(iri);
  }
  const auto& pool =
      (!with_fields.empty() && std::bernoulli_distribution(0.8)(rng)) ? with_fields : classes;
  const rdf::Iri type = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];

  InstanceRecord record{random_data_iri(rng), type, {}};
  for (const auto& p : ontology::effective_properties(model, type)) {
    if (std::bernoulli_distribution(0.4)(rng)) continue;
    const bool reference = model.find_class(p.ranges.front()) != nullptr;
    const size_t count = p.functional ? 1 : std::uniform_int_distribution<size_t>(1, 3)(rng);
    std::vector<InstanceValue> values;
    for (size_t i = 0; i < count; ++i) {
      if (reference) {
        values.emplace_back(IriReference{random_data_iri(rng)});
      } else {
        const auto kind = kind_of_datatype(p.ranges.front().str());
        values.emplace_back(ScalarValue{kind, random_lexical(kind, rng)});
      }
    }
    record.values.emplace(p.iri, std::move(values));
  }
  return record;
}

namespace {

// Reads "<...>" at `pos`, returning the IRI and advancing past it.
std::string take_iri(const std::string& line, size_t& pos) {
  if (line.at(pos) != '<') throw std::runtime_error("expected '<' in: " + line);
  const size_t end = line.find('>', pos);
  std::string out = line.substr(pos + 1, end - pos - 1);
  pos = end + 1;
  return out;
}

unsigned hex_value(const std::string& digits) {
  return static_cast<unsigned>(std::stoul(digits, nullptr, 16));
}

void append_utf8(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xc0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xe0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else {
    out += static_cast<char>(0xf0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  }
}

// Reads a quoted literal body at `pos` (just after the opening quote).
std::string take_literal(const std::string& line, size_t& pos) {
  std::string out;
  while (line.at(pos) != '"') {
    char c = line[pos++];
    if (c != '\\') {
      out += c;
      continue;
    }
    c = line.at(pos++);
    switch (c) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
        append_utf8(out, hex_value(line.substr(pos, 4)));
        pos += 4;
        break;
      case 'U':
        append_utf8(out, hex_value(line.substr(pos, 8)));
        pos += 8;
        break;
      default: throw std::runtime_error("bad escape in: " + line);
    }
  }
  ++pos;
  return out;
}

}  // namespace

InstanceRecord regroup_triples(const std::string& ntriples) {
  const std::string rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
  std::optional<std::string> subject;
  std::optional<std::string> type;
  std::map<std::string, std::vector<InstanceValue>> values;

  std::istringstream lines(ntriples);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    size_t pos = 0;
    const std::string s = take_iri(line, pos);
    if (subject && *subject != s) throw std::runtime_error("two subjects in one record");
    subject = s;
    ++pos;
    const std::string p = take_iri(line, pos);
    ++pos;
    if (line.at(pos) == '<') {
      const std::string o = take_iri(line, pos);
      if (p == rdf_type) {
        type = o;
      } else {
        values[p].push_back(IriReference{rdf::Iri(o)});
      }
    } else {
      ++pos;
      const std::string lexical = take_literal(line, pos);
      std::string datatype = "http://www.w3.org/2001/XMLSchema#string";
      if (line.compare(pos, 3, "^^<") == 0) {
        pos += 2;
        datatype = take_iri(line, pos);
      }
      values[p].push_back(ScalarValue{kind_of_datatype(datatype), lexical});
    }
    if (line.compare(pos, std::string::npos, " .") != 0) {
      throw std::runtime_error("bad line ending: " + line);
    }
  }
  if (!subject || !type) throw std::runtime_error("no rdf:type triple");
  InstanceRecord out{rdf::Iri(*subject), rdf::Iri(*type), {}};
  for (auto& [p, v] : values) out.values.emplace(rdf::Iri(p), std::move(v));
  return out;
}

InstanceRecord unordered(InstanceRecord record) {
  for (auto& [p, v] : record.values) std::sort(v.begin(), v.end());
  return record;
}

// Counts statements of a restricted Turtle subset by hand: no collections,
// no blank node property lists, no ';' or ',' inside literals.
size_t count_statements(const std::string& doc) {
  size_t count = 0;
  bool in_literal = false;
  bool in_iri = false;
  bool directive = false;
  bool line_start = true;
  for (size_t i = 0; i < doc.size(); ++i) {
    const char c = doc[i];
    if (in_literal) {
      if (c == '\\') ++i;
      else if (c == '"') in_literal = false;
      continue;
    }
    if (in_iri) {
      in_iri = c != '>';
      continue;
    }
    if (line_start && c == '@') directive = true;
    line_start = c == '\n';
    if (c == '"') in_literal = true;
    else if (c == '<') in_iri = true;
    else if ((c == ',' || c == ';') && !directive) ++count;
    else if (c == '.' && (i + 1 == doc.size() || doc[i + 1] == '\n')) {
      if (!directive) ++count;
      directive = false;
    }
  }
  return count;
}

std::string random_turtle_document(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(0, 3);
  const auto pick = [&](std::initializer_list<const char*> items) {
    std::vector<const char*> v(items);
    return std::string(v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)]);
  };
  std::string doc = "@prefix ex: <http://example.org/> .\n"
                    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";
  const int statements = 1 + small(rng) * 2;
  for (int s = 0; s < statements; ++s) {
    doc += pick({"ex:a", "ex:b", "<http://example.org/c>", "_:n1", "ex:a-b_c"});
    const int predicates = 1 + small(rng);
    for (int p = 0; p < predicates; ++p) {
      doc += p == 0 ? " " : " ;\n  ";
      doc += pick({"ex:p", "a", "ex:q", "<http://example.org/r>"});
      const int objects = 1 + small(rng);
      for (int o = 0; o < objects; ++o) {
        doc += o == 0 ? " " : " , ";
        doc += pick({"ex:o", "_:n2", "\"text\"", "\"t\\\"q\\\\\"", "\"hi\"@en", "\"5\"^^xsd:integer",
                     "17", "-2.50", "false", "\"tab\\there\"", "\"\\u00e9t\\u00e9\"",
                     "\"new\\nline\"", "\"ctl\\u0001\""});
      }
    }
    doc += " .\n";
  }
  return doc;
}

std::vector<std::string> random_words(std::mt19937_64& rng) {
  static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  static const std::string tail = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> length(1, 6);
  std::vector<std::string> out;
  for (int n = count(rng); n > 0; --n) {
    std::string w(1, letters[rng() % letters.size()]);
    for (int k = length(rng) - 1; k > 0; --k) w += tail[rng() % tail.size()];
    out.push_back(w);
  }
  return out;
}

std::string describe(const InstanceRecord& record) {
  std::string out = record.id.str() + " a " + record.type.str();
  for (const auto& [p, values] : record.values) {
    out += "\n  " + p.str() + ":";
    for (const auto& v : values) {
      if (const auto* ref = std::get_if<IriReference>(&v)) {
        out += " <" + ref->iri.str() + ">";
      } else {
        const auto& s = std::get<ScalarValue>(v);
        out += " " + std::string(codegen::to_string(s.kind)) + "(" + emit::json_quote(s.lexical) + ")";
      }
    }
  }
  return out;
}

}  // namespace knowforge::testing
