#include "knowforge/codegen/ir.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knowforge::codegen {

using ontology::OntologyModel;
using ontology::OntologyProperty;

namespace {

FieldValue field_value(const OntologyModel& model, const OntologyProperty& p) {
  if (p.ranges.empty()) throw GenerationError("property " + p.iri.str() + " has no range");
  std::vector<Iri> classes;
  std::set<ScalarKind> scalars;
  for (const Iri& r : p.ranges) {
    if (model.find_class(r) != nullptr) {
      classes.push_back(r);
      continue;
    }
    try {
      scalars.insert(map_scalar(r));
    } catch (const UnsupportedDatatype&) {
      throw UnsupportedDatatype(r, p.iri);
    }
  }
  if (!classes.empty() && !scalars.empty()) {
    throw GenerationError("property " + p.iri.str() + " mixes class and datatype ranges");
  }
  if (!classes.empty()) return EntityReference{classes.front()};
  if (scalars.size() > 1) {
    throw GenerationError("property " + p.iri.str() + " has ranges of different scalar kinds");
  }
  return *scalars.begin();
}

}  // namespace

FieldSpec make_field(const OntologyModel& model, const OntologyProperty& p, const Iri& origin) {
  return FieldSpec{split_words(p.local_name), field_value(model, p),
                   p.functional ? Cardinality::kOptionalSingle : Cardinality::kMany, origin, p.iri};
}

namespace {
// Fields for properties whose domain names `class_iri` itself.
std::vector<FieldSpec> declared_fields(const OntologyModel& model, const Iri& class_iri) {
  std::vector<FieldSpec> out;
  for (const auto& p : ontology::effective_properties(model, class_iri)) {
    if (std::find(p.domains.begin(), p.domains.end(), class_iri) == p.domains.end()) break;
    out.push_back(make_field(model, p, class_iri));
  }
  return out;
}

}  // namespace

std::vector<TypeSpec> build_ir(const OntologyModel& model, const TargetProfile& profile) {
  std::map<Iri, TypeSpec> specs;
  for (const auto& [iri, c] : model.classes) {
    TypeSpec spec{split_words(c.local_name), iri, std::nullopt, declared_fields(model, iri), {},
                  c.comment};

    std::set<Iri> seen_properties;
    for (const Iri& ancestor : ontology::ancestors(model, iri)) {
      for (auto& f : declared_fields(model, ancestor)) {
        if (seen_properties.insert(f.property_iri).second) spec.all_fields.push_back(std::move(f));
      }
    }
    for (const auto& f : spec.own_fields) {
      if (seen_properties.insert(f.property_iri).second) {
        spec.all_fields.push_back(f);
      } else {
        // Redeclared on the subclass; keep it in the subclass position.
        std::erase_if(spec.all_fields,
                      [&](const FieldSpec& g) { return g.property_iri == f.property_iri; });
        spec.all_fields.push_back(f);
      }
    }
    std::set<WordSequence> names;
    for (const auto& f : spec.all_fields) {
      if (!names.insert(f.words).second) {
        throw GenerationError("class " + iri.str() + " has two fields named '" +
                              apply_convention(f.words, NamingConvention::kLowerSnake) + "'");
      }
    }

    if (!profile.flatten_inheritance) {
      for (const Iri& super : c.superclasses) {
        if (model.find_class(super) != nullptr) {
          spec.parent = super;
          break;
        }
      }
    }
    specs.emplace(iri, std::move(spec));
  }

  // Kahn's algorithm; the ready set is ordered by type name.
  std::map<Iri, size_t> pending;
  std::map<Iri, std::vector<Iri>> children;
  for (const auto& [iri, c] : model.classes) {
    size_t n = 0;
    for (const Iri& super : c.superclasses) {
      if (model.find_class(super) == nullptr) continue;
      ++n;
      children[super].push_back(iri);
    }
    pending[iri] = n;
  }
  std::set<std::pair<std::string, Iri>> ready;
  for (const auto& [iri, n] : pending) {
    if (n == 0) ready.emplace(profile.type_name(specs.at(iri).words), iri);
  }
  std::vector<TypeSpec> out;
  while (!ready.empty()) {
    const Iri next = ready.begin()->second;
    ready.erase(ready.begin());
    for (const Iri& child : children[next]) {
      if (--pending[child] == 0) ready.emplace(profile.type_name(specs.at(child).words), child);
    }
    out.push_back(std::move(specs.at(next)));
  }
  if (out.size() != model.classes.size()) {
    throw GenerationError("subclass hierarchy contains a cycle");
  }
  return out;
}

}  // namespace knowforge::codegen
