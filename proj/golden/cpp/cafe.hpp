// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

#pragma once

#define KNOW_HPP_RUNTIME_ONLY
#include "know.hpp"
#undef KNOW_HPP_RUNTIME_ONLY
#include "place.hpp"

namespace know {

class Cafe : public Place {
 public:
  static constexpr std::string_view kClassIri = "https://know.dev/Cafe";

  explicit Cafe(std::string id) : Place(std::move(id)) {}

  std::string_view class_iri() const override { return kClassIri; }

  std::string to_json() const override {
    detail::JsonWriter w(id(), kClassIri);
    return w.finish();
  }

  std::string to_triples() const override {
    detail::TripleWriter w(id(), kClassIri);
    return w.finish();
  }

  static Cafe from_json(std::string_view text) {
    return std::move(*from_json_object(detail::parse(text)));
  }

  static std::unique_ptr<Cafe> from_json_object(const nlohmann::json& object) {
    auto out = std::make_unique<Cafe>(detail::read_id(object, kClassIri));
    for (const auto& [key, value] : object.items()) {
      if (key == "id" || key == "type") continue;
      detail::unknown_member(key, kClassIri);
    }
    return out;
  }
};

inline const bool kCafeRegistered = detail::register_type<Cafe>();

}  // namespace know
