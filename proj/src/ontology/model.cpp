#include "knowforge/ontology/model.hpp"

#include <algorithm>
#include <set>

namespace knowforge::ontology {

using rdf::BlankNode;
using rdf::Literal;
using rdf::Subject;
using rdf::Term;
using rdf::Triple;
namespace ns = rdf::ns;

const OntologyClass* OntologyModel::find_class(const Iri& iri) const {
  const auto it = classes.find(iri);
  return it == classes.end() ? nullptr : &it->second;
}

const OntologyProperty* OntologyModel::find_property(const Iri& iri) const {
  const auto it = properties.find(iri);
  return it == properties.end() ? nullptr : &it->second;
}

UnknownClass::UnknownClass(const Iri& iri)
    : std::out_of_range("unknown class " + iri.str()), iri_(iri) {}

std::string local_name_of(const Iri& iri, const Iri& base) {
  const std::string& s = iri.str();
  const std::string& b = base.str();
  if (s.size() > b.size() && s.starts_with(b)) return s.substr(b.size());
  const size_t cut = s.find_last_of("/#");
  return cut == std::string::npos ? s : s.substr(cut + 1);
}

namespace {

class GraphIndex {
 public:
  explicit GraphIndex(const rdf::Graph& graph) {
    for (const auto& t : graph.triples) by_subject_[t.subject].push_back(&t);
  }

  std::vector<const Term*> objects(const Subject& s, const Iri& p) const {
    std::vector<const Term*> out;
    const auto it = by_subject_.find(s);
    if (it == by_subject_.end()) return out;
    for (const Triple* t : it->second) {
      if (t->predicate == p) out.push_back(&t->object);
    }
    return out;
  }

  bool has_type(const Subject& s, const Iri& type) const {
    for (const Term* o : objects(s, ns::rdf("type"))) {
      if (const auto* iri = std::get_if<Iri>(o); iri && *iri == type) return true;
    }
    return false;
  }

  // Members of an RDF collection, in list order.
  std::vector<const Term*> list_members(const Term& head) const {
    std::vector<const Term*> out;
    std::set<Subject> seen;
    const Term* node = &head;
    for (;;) {
      const auto* blank = std::get_if<BlankNode>(node);
      if (blank == nullptr || !seen.insert(*blank).second) break;
      const auto first = objects(*blank, ns::rdf("first"));
      const auto rest = objects(*blank, ns::rdf("rest"));
      if (first.empty() || rest.empty()) break;
      out.push_back(first.front());
      node = rest.front();
    }
    return out;
  }

  // IRIs denoted by `term`: the IRI itself, or the members of an owl:unionOf
  // blank node.
  std::vector<Iri> class_expression(const Term& term) const {
    std::vector<Iri> out;
    if (const auto* iri = std::get_if<Iri>(&term)) {
      out.push_back(*iri);
    } else if (const auto* blank = std::get_if<BlankNode>(&term)) {
      for (const Term* list : objects(*blank, ns::owl("unionOf"))) {
        for (const Term* member : list_members(*list)) {
          if (const auto* iri = std::get_if<Iri>(member)) out.push_back(*iri);
        }
      }
    }
    return out;
  }

 private:
  std::map<Subject, std::vector<const Triple*>> by_subject_;
};

void sort_unique(std::vector<Iri>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Iri> iri_objects(const GraphIndex& index, const Subject& s, const Iri& p) {
  std::vector<Iri> out;
  for (const Term* o : index.objects(s, p)) {
    if (const auto* iri = std::get_if<Iri>(o)) out.push_back(*iri);
  }
  sort_unique(out);
  return out;
}

// Picks one annotation value independent of triple order: English or
// untagged literals win, then the lexicographically smallest.
std::optional<std::string> pick_text(const GraphIndex& index, const Subject& s, const Iri& p) {
  std::optional<std::pair<int, std::string>> best;
  for (const Term* o : index.objects(s, p)) {
    const auto* lit = std::get_if<Literal>(o);
    if (lit == nullptr) continue;
    const bool preferred = !lit->language || lit->language->empty() ||
                           lit->language->starts_with("en");
    std::pair<int, std::string> key{preferred ? 0 : 1, lit->lexical};
    if (!best || key < *best) best = std::move(key);
  }
  if (!best) return std::nullopt;
  return best->second;
}

std::vector<Iri> expressions(const GraphIndex& index, const Subject& s, const Iri& p) {
  std::vector<Iri> out;
  for (const Term* o : index.objects(s, p)) {
    for (auto& iri : index.class_expression(*o)) out.push_back(std::move(iri));
  }
  sort_unique(out);
  return out;
}

}  // namespace

OntologyModel build_model(const rdf::Graph& graph, const Iri& base) {
  OntologyModel model{base, {}, {}, graph.prefixes};
  const GraphIndex index(graph);

  const Iri rdf_type = ns::rdf("type");
  const std::vector<Iri> class_types = {ns::owl("Class"), ns::rdfs("Class")};
  const std::vector<Iri> property_types = {ns::owl("ObjectProperty"), ns::owl("DatatypeProperty"),
                                           ns::owl("AnnotationProperty"), ns::rdf("Property")};

  std::set<Iri> class_iris;
  std::set<Iri> property_iris;
  for (const auto& t : graph.triples) {
    const auto* subject = std::get_if<Iri>(&t.subject);
    const auto* type = std::get_if<Iri>(&t.object);
    if (subject == nullptr || type == nullptr || t.predicate != rdf_type) continue;
    if (std::find(class_types.begin(), class_types.end(), *type) != class_types.end()) {
      class_iris.insert(*subject);
    }
    if (std::find(property_types.begin(), property_types.end(), *type) != property_types.end()) {
      property_iris.insert(*subject);
    }
  }

  for (const Iri& iri : class_iris) {
    OntologyClass c{iri, local_name_of(iri, base), {}, {}, {}, {}};
    c.label = pick_text(index, iri, ns::rdfs("label"));
    c.comment = pick_text(index, iri, ns::rdfs("comment"));
    c.superclasses = iri_objects(index, iri, ns::rdfs("subClassOf"));
    std::erase(c.superclasses, iri);
    c.mappings = iri_objects(index, iri, ns::owl("equivalentClass"));
    for (auto& m : iri_objects(index, iri, ns::skos("exactMatch"))) c.mappings.push_back(m);
    sort_unique(c.mappings);
    model.classes.emplace(iri, std::move(c));
  }

  for (const Iri& iri : property_iris) {
    OntologyProperty p{iri, local_name_of(iri, base), {}, {}, {}, {}, false, {}, {}, {}};
    p.label = pick_text(index, iri, ns::rdfs("label"));
    p.comment = pick_text(index, iri, ns::rdfs("comment"));
    p.domains = expressions(index, iri, ns::rdfs("domain"));
    p.ranges = expressions(index, iri, ns::rdfs("range"));
    p.functional = index.has_type(iri, ns::owl("FunctionalProperty"));
    if (const auto inverses = iri_objects(index, iri, ns::owl("inverseOf")); !inverses.empty()) {
      p.inverse_of = inverses.front();
    }
    p.super_properties = iri_objects(index, iri, ns::rdfs("subPropertyOf"));
    std::erase(p.super_properties, iri);
    p.mappings = iri_objects(index, iri, ns::owl("equivalentProperty"));
    for (auto& m : iri_objects(index, iri, ns::skos("exactMatch"))) p.mappings.push_back(m);
    sort_unique(p.mappings);
    model.properties.emplace(iri, std::move(p));
  }

  // owl:inverseOf is symmetric; complete one-sided declarations.
  for (auto& [iri, p] : model.properties) {
    if (!p.inverse_of) continue;
    auto it = model.properties.find(*p.inverse_of);
    if (it != model.properties.end() && !it->second.inverse_of && it->first != iri) {
      it->second.inverse_of = iri;
    }
  }
  return model;
}

std::vector<Iri> ancestors(const OntologyModel& model, const Iri& class_iri) {
  const OntologyClass* start = model.find_class(class_iri);
  if (start == nullptr) throw UnknownClass(class_iri);

  std::vector<Iri> out;
  std::set<Iri> seen{class_iri};
  std::vector<Iri> frontier{class_iri};
  while (!frontier.empty()) {
    std::set<Iri> next;
    for (const Iri& iri : frontier) {
      for (const Iri& super : model.find_class(iri)->superclasses) {
        if (model.find_class(super) != nullptr && !seen.contains(super)) next.insert(super);
      }
    }
    frontier.assign(next.begin(), next.end());
    for (const Iri& iri : frontier) {
      seen.insert(iri);
      out.push_back(iri);
    }
  }
  return out;
}

std::vector<OntologyProperty> effective_properties(const OntologyModel& model,
                                                   const Iri& class_iri) {
  const std::vector<Iri> inherited_from = ancestors(model, class_iri);
  const std::set<Iri> lineage(inherited_from.begin(), inherited_from.end());

  std::vector<OntologyProperty> own;
  std::vector<OntologyProperty> inherited;
  for (const auto& [iri, p] : model.properties) {
    const auto& d = p.domains;
    if (std::find(d.begin(), d.end(), class_iri) != d.end()) {
      own.push_back(p);
    } else if (std::any_of(d.begin(), d.end(), [&](const Iri& x) { return lineage.contains(x); })) {
      inherited.push_back(p);
    }
  }
  const auto by_name = [](const OntologyProperty& a, const OntologyProperty& b) {
    return std::tie(a.local_name, a.iri) < std::tie(b.local_name, b.iri);
  };
  std::sort(own.begin(), own.end(), by_name);
  std::sort(inherited.begin(), inherited.end(), by_name);
  own.insert(own.end(), inherited.begin(), inherited.end());
  return own;
}

}  // namespace knowforge::ontology
