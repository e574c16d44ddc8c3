#include "knowforge/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "knowforge/codegen/ir.hpp"
#include "knowforge/emit/emit.hpp"
#include "knowforge/ontology/diagnostic.hpp"
#include "knowforge/rdf/ntriples.hpp"
#include "knowforge/rdf/turtle.hpp"
#include "knowforge/vocab/know.hpp"

namespace knowforge::cli {

namespace {

namespace fs = std::filesystem;

// Thrown to unwind with a given exit status after the message is printed.
struct Exit {
  int status;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    err << "knowforge: cannot read '" << path << "': no such file\n";
    throw Exit{kUsage};
  }
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in) {
    err << "knowforge: cannot read '" << path << "'\n";
    throw Exit{kUsage};
  }
  return buf.str();
}

rdf::Iri parse_base(const std::string& text, std::ostream& err) {
  if (!rdf::is_absolute_iri(text)) {
    err << "knowforge: --base must be an absolute IRI, got '" << text << "'\n";
    throw Exit{kUsage};
  }
  return rdf::Iri(text);
}

rdf::Graph load_graph(const std::string& path, const std::optional<rdf::Iri>& base,
                      std::ostream& err) {
  const std::string text = read_file(path, err);
  try {
    return rdf::parse_turtle(text, base);
  } catch (const rdf::ParseError& e) {
    err << path << ":" << e.location().line << ":" << e.location().column << ": " << e.detail()
        << "\n";
    throw Exit{kFailure};
  }
}

std::vector<codegen::TargetProfile> profiles(std::ostream& err) {
  try {
    if (const char* dir = std::getenv("KNOWFORGE_PROFILES"); dir != nullptr && *dir != '\0') {
      return codegen::load_profiles(dir);
    }
    return codegen::bundled_profiles();
  } catch (const codegen::ProfileError& e) {
    err << "knowforge: " << e.what() << "\n";
    throw Exit{kUsage};
  }
}

int cmd_parse(const std::string& input, std::ostream& out, std::ostream& err) {
  out << rdf::to_ntriples(load_graph(input, std::nullopt, err));
  return kSuccess;
}

// Parses, builds and validates; prints diagnostics to `sink`.
ontology::OntologyModel checked_model(const std::string& input, const rdf::Iri& base,
                                      std::ostream& sink, std::ostream& err, bool& failed) {
  const rdf::Graph graph = load_graph(input, base, err);
  ontology::OntologyModel model = ontology::build_model(graph, base);
  const auto diagnostics = ontology::validate(model);
  for (const auto& d : diagnostics) sink << ontology::format_diagnostic(d) << "\n";
  failed = ontology::has_errors(diagnostics);
  return model;
}

int cmd_validate(const std::string& input, const std::string& base, std::ostream& out,
                 std::ostream& err) {
  bool failed = false;
  checked_model(input, parse_base(base, err), out, err, failed);
  return failed ? kFailure : kSuccess;
}

int cmd_generate(const std::string& input, const std::string& base,
                 const std::vector<std::string>& targets, const std::string& out_dir,
                 std::ostream& out, std::ostream& err) {
  const rdf::Iri base_iri = parse_base(base, err);
  const auto available = profiles(err);

  std::set<std::string> tokens;
  for (const auto& t : targets) {
    if (t == "all") {
      for (const auto& p : available) {
        if (emit::is_implemented(p.name)) tokens.insert(p.name);
      }
      continue;
    }
    const bool known = std::any_of(available.begin(), available.end(),
                                   [&](const codegen::TargetProfile& p) { return p.name == t; });
    if (!known) {
      err << "knowforge: unknown target '" << t << "'; available:";
      for (const auto& p : available) err << " " << p.name;
      err << " all\n";
      return kUsage;
    }
    tokens.insert(t);
  }
  std::vector<const codegen::TargetProfile*> selected;
  for (const auto& p : available) {
    if (!tokens.contains(p.name)) continue;
    if (!emit::is_implemented(p.name)) {
      err << "knowforge: " << emit::NotImplementedProfile(p.name).what() << "\n";
      return kFailure;
    }
    selected.push_back(&p);
  }

  bool failed = false;
  const auto model = checked_model(input, base_iri, err, err, failed);
  if (failed) {
    err << "knowforge: " << input << " has errors; nothing generated\n";
    return kFailure;
  }

  // Render every target before touching the output directory.
  std::vector<std::future<emit::FileSet>> jobs;
  for (const auto* p : selected) {
    jobs.push_back(std::async(std::launch::async,
                              [&model, p] { return emit::emit(codegen::build_ir(model, *p), *p); }));
  }
  std::vector<emit::FileSet> rendered;
  try {
    for (auto& job : jobs) rendered.push_back(job.get());
  } catch (const codegen::GenerationError& e) {
    err << "knowforge: " << e.what() << "\n";
    return kFailure;
  }

  std::vector<std::string> written;
  try {
    for (size_t i = 0; i < selected.size(); ++i) {
      const fs::path dir = fs::path(out_dir) / selected[i]->name;
      emit::write_tree(rendered[i], dir);
      for (const auto& [path, text] : rendered[i]) {
        written.push_back((dir / path).generic_string());
      }
    }
  } catch (const fs::filesystem_error& e) {
    err << "knowforge: " << e.what() << "\n";
    return kUsage;
  }
  std::sort(written.begin(), written.end());
  for (const auto& w : written) out << w << "\n";
  return kSuccess;
}

int cmd_targets(std::ostream& out, std::ostream& err) {
  for (const auto& p : profiles(err)) {
    out << p.name << "  " << codegen::to_string(p.construct) << "  "
        << (emit::is_implemented(p.name) ? "implemented" : "not-implemented") << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compiles an OWL ontology in Turtle into per-language SDK source trees.",
               "knowforge"};
  app.require_subcommand(1);

  std::string input;
  std::string base(vocab::kBaseIri);
  std::vector<std::string> targets;
  std::string out_dir;

  auto* parse = app.add_subcommand("parse", "Print the canonical N-Triples of a Turtle file");
  parse->add_option("input", input, "Turtle file")->required();

  auto* validate = app.add_subcommand("validate", "Check an ontology and list diagnostics");
  validate->add_option("input", input, "Turtle file")->required();
  validate->add_option("--base", base, "Ontology base IRI")->capture_default_str();

  auto* generate = app.add_subcommand("generate", "Write SDK source trees");
  generate->add_option("input", input, "Turtle file")->required();
  generate->add_option("--base", base, "Ontology base IRI")->capture_default_str();
  generate->add_option("-t,--target", targets, "Profile token, or 'all'; repeatable")->required();
  generate->add_option("-o,--out", out_dir, "Output directory")->required();

  auto* list = app.add_subcommand("targets", "List profile tokens");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*parse) return cmd_parse(input, out, err);
    if (*validate) return cmd_validate(input, base, out, err);
    if (*generate) return cmd_generate(input, base, targets, out_dir, out, err);
    if (*list) return cmd_targets(out, err);
  } catch (const Exit& e) {
    return e.status;
  }
  return kUsage;
}

}  // namespace knowforge::cli
