#include <algorithm>
#include <functional>
#include <set>

#include "knowforge/codegen/naming.hpp"
#include "knowforge/ontology/diagnostic.hpp"

namespace knowforge::ontology {

using codegen::NamingConvention;

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out(to_string(d.severity));
  out += ' ';
  out += d.code;
  out += ' ';
  out += d.subject ? d.subject->str() : std::string("-");
  out += ": ";
  out += d.message;
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

namespace {

class Collector {
 public:
  void add(Severity severity, std::string_view code, const Iri& subject, std::string message) {
    out_.push_back(Diagnostic{severity, std::string(code), std::move(message), subject, std::nullopt});
  }
  std::vector<Diagnostic> take() && {
    std::sort(out_.begin(), out_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::tie(a.severity, a.subject, a.code, a.message) <
             std::tie(b.severity, b.subject, b.code, b.message);
    });
    return std::move(out_);
  }

 private:
  std::vector<Diagnostic> out_;
};

// Key under which two names would collide in generated code.
std::string collision_key(const std::string& local_name) {
  try {
    return codegen::apply_convention(codegen::split_words(local_name),
                                     NamingConvention::kLowerSnake);
  } catch (const codegen::InvalidIdentifier&) {
    return local_name;
  }
}

void check_naming(Collector& out, const Iri& subject, const std::string& local_name,
                  NamingConvention expected, std::string_view kind) {
  try {
    const auto words = codegen::split_words(local_name);
    const std::string canonical = codegen::apply_convention(words, expected);
    if (canonical != local_name) {
      out.add(Severity::kWarning, code::kNaming, subject,
              std::string(kind) + " name '" + local_name + "' is not " +
                  std::string(codegen::to_string(expected)) + " case (expected '" + canonical +
                  "')");
    }
  } catch (const codegen::InvalidIdentifier& e) {
    out.add(Severity::kError, code::kNaming, subject,
            std::string(kind) + " name '" + local_name + "' is not a usable identifier: " +
                e.what());
  }
}

template <typename Map>
void check_duplicates(Collector& out, const Map& items, std::string_view kind) {
  std::map<std::string, std::vector<Iri>> groups;
  for (const auto& [iri, item] : items) groups[collision_key(item.local_name)].push_back(iri);
  for (const auto& [key, iris] : groups) {
    if (iris.size() < 2) continue;
    std::string names;
    for (const auto& iri : iris) {
      if (!names.empty()) names += ", ";
      names += iri.str();
    }
    out.add(Severity::kError, code::kDuplicateLocalName, iris.front(),
            std::string(kind) + " names collide as '" + key + "': " + names);
  }
}

// Tarjan's strongly connected components over in-model subclass edges.
void check_cycles(Collector& out, const OntologyModel& model) {
  std::map<Iri, int> index;
  std::map<Iri, int> low;
  std::set<Iri> on_stack;
  std::vector<Iri> stack;
  int counter = 0;

  std::function<void(const Iri&)> visit = [&](const Iri& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const Iri& w : model.classes.at(v).superclasses) {
      if (model.find_class(w) == nullptr) continue;
      if (!index.contains(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.contains(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<Iri> component;
    for (;;) {
      Iri w = stack.back();
      stack.pop_back();
      on_stack.erase(w);
      component.push_back(std::move(w));
      if (component.back() == v) break;
    }
    if (component.size() < 2) return;
    std::sort(component.begin(), component.end());
    std::string names;
    for (const auto& iri : component) {
      if (!names.empty()) names += ", ";
      names += iri.str();
    }
    out.add(Severity::kError, code::kCycle, component.front(), "subclass cycle: " + names);
  };

  for (const auto& [iri, c] : model.classes) {
    if (!index.contains(iri)) visit(iri);
  }
}

bool is_xsd_datatype(const Iri& iri) { return iri.str().starts_with(rdf::ns::kXsd); }

}  // namespace

std::vector<Diagnostic> validate(const OntologyModel& model) {
  Collector out;

  for (const auto& [iri, c] : model.classes) {
    check_naming(out, iri, c.local_name, NamingConvention::kPascal, "class");
  }
  check_duplicates(out, model.classes, "class");
  check_cycles(out, model);

  for (const auto& [iri, p] : model.properties) {
    check_naming(out, iri, p.local_name, NamingConvention::kCamel, "property");
    if (p.domains.empty()) {
      out.add(Severity::kWarning, code::kNoDomain, iri,
              "property has no domain and is excluded from code generation");
    }
    for (const Iri& d : p.domains) {
      if (model.find_class(d) == nullptr) {
        out.add(Severity::kError, code::kDanglingDomain, iri,
                "domain " + d.str() + " is not a class of the model");
      }
    }
    if (p.ranges.empty()) {
      out.add(Severity::kError, code::kDanglingRange, iri, "property has no range");
    }
    for (const Iri& r : p.ranges) {
      if (model.find_class(r) == nullptr && !is_xsd_datatype(r)) {
        out.add(Severity::kError, code::kDanglingRange, iri,
                "range " + r.str() + " is neither a class of the model nor an XSD datatype");
      }
    }
    if (p.inverse_of && model.find_property(*p.inverse_of) == nullptr) {
      out.add(Severity::kError, code::kDanglingInverse, iri,
              "inverse " + p.inverse_of->str() + " is not a property of the model");
    }
    for (const Iri& s : p.super_properties) {
      if (model.find_property(s) == nullptr) {
        out.add(Severity::kError, code::kDanglingSuperprop, iri,
                "super-property " + s.str() + " is not a property of the model");
      }
    }
  }
  check_duplicates(out, model.properties, "property");

  return std::move(out).take();
}

}  // namespace knowforge::ontology
