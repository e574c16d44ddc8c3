// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

#pragma once

#define KNOW_HPP_RUNTIME_ONLY
#include "know.hpp"
#undef KNOW_HPP_RUNTIME_ONLY

namespace know {

// A person, real or fictional.
class Person : public Entity {
 public:
  static constexpr std::string_view kClassIri = "https://know.dev/Person";

  explicit Person(std::string id) : Entity(std::move(id)) {}

  const std::optional<std::int64_t>& age() const { return age_; }
  void set_age(std::optional<std::int64_t> value) { age_ = std::move(value); }
  const std::vector<std::string>& aunt() const { return aunt_; }
  void set_aunt(std::vector<std::string> value) { aunt_ = std::move(value); }
  const std::vector<std::string>& brother() const { return brother_; }
  void set_brother(std::vector<std::string> value) { brother_ = std::move(value); }
  const std::vector<std::string>& child() const { return child_; }
  void set_child(std::vector<std::string> value) { child_ = std::move(value); }
  const std::optional<std::string>& father() const { return father_; }
  void set_father(std::optional<std::string> value) { father_ = std::move(value); }
  const std::optional<std::string>& mother() const { return mother_; }
  void set_mother(std::optional<std::string> value) { mother_ = std::move(value); }
  const std::optional<std::string>& name() const { return name_; }
  void set_name(std::optional<std::string> value) { name_ = std::move(value); }
  const std::vector<std::string>& nephew() const { return nephew_; }
  void set_nephew(std::vector<std::string> value) { nephew_ = std::move(value); }
  const std::vector<std::string>& niece() const { return niece_; }
  void set_niece(std::vector<std::string> value) { niece_ = std::move(value); }
  const std::vector<std::string>& parent() const { return parent_; }
  void set_parent(std::vector<std::string> value) { parent_ = std::move(value); }
  const std::vector<std::string>& sibling() const { return sibling_; }
  void set_sibling(std::vector<std::string> value) { sibling_ = std::move(value); }
  const std::vector<std::string>& sister() const { return sister_; }
  void set_sister(std::vector<std::string> value) { sister_ = std::move(value); }
  const std::vector<std::string>& uncle() const { return uncle_; }
  void set_uncle(std::vector<std::string> value) { uncle_ = std::move(value); }

  std::string_view class_iri() const override { return kClassIri; }

  std::string to_json() const override {
    detail::JsonWriter w(id(), kClassIri);
    w.member("age", age_);
    w.member("aunt", aunt_);
    w.member("brother", brother_);
    w.member("child", child_);
    w.member("father", father_);
    w.member("mother", mother_);
    w.member("name", name_);
    w.member("nephew", nephew_);
    w.member("niece", niece_);
    w.member("parent", parent_);
    w.member("sibling", sibling_);
    w.member("sister", sister_);
    w.member("uncle", uncle_);
    return w.finish();
  }

  std::string to_triples() const override {
    detail::TripleWriter w(id(), kClassIri);
    w.literals("https://know.dev/age", age_,
               "http://www.w3.org/2001/XMLSchema#integer");
    w.references("https://know.dev/aunt", aunt_);
    w.references("https://know.dev/brother", brother_);
    w.references("https://know.dev/child", child_);
    w.references("https://know.dev/father", father_);
    w.references("https://know.dev/mother", mother_);
    w.literals("https://know.dev/name", name_,
               "http://www.w3.org/2001/XMLSchema#string");
    w.references("https://know.dev/nephew", nephew_);
    w.references("https://know.dev/niece", niece_);
    w.references("https://know.dev/parent", parent_);
    w.references("https://know.dev/sibling", sibling_);
    w.references("https://know.dev/sister", sister_);
    w.references("https://know.dev/uncle", uncle_);
    return w.finish();
  }

  static Person from_json(std::string_view text) {
    return std::move(*from_json_object(detail::parse(text)));
  }

  static std::unique_ptr<Person> from_json_object(const nlohmann::json& object) {
    auto out = std::make_unique<Person>(detail::read_id(object, kClassIri));
    for (const auto& [key, value] : object.items()) {
      if (key == "id" || key == "type") continue;
      if (key == "age") {
        detail::read(value, key, out->age_);
      } else if (key == "aunt") {
        detail::read(value, key, out->aunt_);
      } else if (key == "brother") {
        detail::read(value, key, out->brother_);
      } else if (key == "child") {
        detail::read(value, key, out->child_);
      } else if (key == "father") {
        detail::read(value, key, out->father_);
      } else if (key == "mother") {
        detail::read(value, key, out->mother_);
      } else if (key == "name") {
        detail::read(value, key, out->name_);
      } else if (key == "nephew") {
        detail::read(value, key, out->nephew_);
      } else if (key == "niece") {
        detail::read(value, key, out->niece_);
      } else if (key == "parent") {
        detail::read(value, key, out->parent_);
      } else if (key == "sibling") {
        detail::read(value, key, out->sibling_);
      } else if (key == "sister") {
        detail::read(value, key, out->sister_);
      } else if (key == "uncle") {
        detail::read(value, key, out->uncle_);
      } else {
        detail::unknown_member(key, kClassIri);
      }
    }
    return out;
  }

 protected:
  std::optional<std::int64_t> age_;
  std::vector<std::string> aunt_;
  std::vector<std::string> brother_;
  std::vector<std::string> child_;
  std::optional<std::string> father_;
  std::optional<std::string> mother_;
  std::optional<std::string> name_;
  std::vector<std::string> nephew_;
  std::vector<std::string> niece_;
  std::vector<std::string> parent_;
  std::vector<std::string> sibling_;
  std::vector<std::string> sister_;
  std::vector<std::string> uncle_;
};

inline const bool kPersonRegistered = detail::register_type<Person>();

}  // namespace know
