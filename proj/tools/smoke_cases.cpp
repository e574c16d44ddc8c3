#include "smoke_cases.hpp"

#include <algorithm>

#include "knowforge/vocab/know.hpp"

namespace knowforge::tools {

using codegen::ScalarKind;
using emit::InstanceRecord;
using emit::IriReference;
using emit::ScalarValue;
using vocab::know;

rdf::Iri data_iri(std::string_view local) {
  return rdf::Iri(std::string(kDataNamespace) + std::string(local));
}

InstanceRecord alice() {
  return InstanceRecord{data_iri("alice"),
                        know("Person"),
                        {{know("age"), {ScalarValue{ScalarKind::kInteger, "30"}}},
                         {know("brother"),
                          {IriReference{data_iri("bob")}, IriReference{data_iri("dave")}}}}};
}

namespace {

std::vector<InstanceRecord> valid_records() {
  std::vector<InstanceRecord> out;
  out.push_back(alice());
  out.push_back(InstanceRecord{data_iri("nobody"), know("Person"), {}});
  out.push_back(InstanceRecord{
      data_iri("bob"),
      know("Person"),
      {{know("name"), {ScalarValue{ScalarKind::kText, "Bob \"Bobby\" Tables\\\n\tJr. \xc3\xa9"}}},
       {know("age"), {ScalarValue{ScalarKind::kInteger, "-7"}}},
       {know("father"), {IriReference{data_iri("carl")}}},
       {know("mother"), {IriReference{data_iri("mia")}}},
       {know("sister"), {IriReference{data_iri("alice")}}},
       {know("sibling"), {IriReference{data_iri("alice")}, IriReference{data_iri("dave")}}}}});
  out.push_back(InstanceRecord{data_iri("corner-cafe"), know("Cafe"), {}});
  out.push_back(InstanceRecord{
      data_iri("control-chars"),
      know("Person"),
      {{know("name"), {ScalarValue{ScalarKind::kText, "\x01\x1f\x7f\b\f\r \xf0\x9f\x98\x80"}}}}});
  return out;
}

std::string local_part(const rdf::Iri& iri) {
  return iri.str().substr(kDataNamespace.size());
}

}  // namespace

std::vector<SmokeCase> smoke_cases() {
  const auto& model = vocab::bundled_model();
  std::vector<SmokeCase> out;
  for (const auto& r : valid_records()) {
    out.push_back({local_part(r.id), emit::instance_to_json(r, model),
                   emit::instance_to_triples(r, model)});
  }
  out.push_back({"reject_unknown_property",
                 "{\n  \"id\": \"https://example.org/know-data/eve\",\n"
                 "  \"type\": \"https://know.dev/Person\",\n"
                 "  \"age\": 41,\n  \"favoriteColor\": \"green\"\n}\n",
                 ""});
  out.push_back({"reject_single_as_array",
                 "{\n  \"id\": \"https://example.org/know-data/eve\",\n"
                 "  \"type\": \"https://know.dev/Person\",\n"
                 "  \"father\": [\n    \"https://example.org/know-data/carl\"\n  ]\n}\n",
                 ""});
  std::sort(out.begin(), out.end(),
            [](const SmokeCase& a, const SmokeCase& b) { return a.name < b.name; });
  return out;
}

}  // namespace knowforge::tools
