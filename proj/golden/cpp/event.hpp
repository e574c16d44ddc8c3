// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

#pragma once

#define KNOW_HPP_RUNTIME_ONLY
#include "know.hpp"
#undef KNOW_HPP_RUNTIME_ONLY

namespace know {

// Something that happens at a given time and place.
class Event : public Entity {
 public:
  static constexpr std::string_view kClassIri = "https://know.dev/Event";

  explicit Event(std::string id) : Entity(std::move(id)) {}

  std::string_view class_iri() const override { return kClassIri; }

  std::string to_json() const override {
    detail::JsonWriter w(id(), kClassIri);
    return w.finish();
  }

  std::string to_triples() const override {
    detail::TripleWriter w(id(), kClassIri);
    return w.finish();
  }

  static Event from_json(std::string_view text) {
    return std::move(*from_json_object(detail::parse(text)));
  }

  static std::unique_ptr<Event> from_json_object(const nlohmann::json& object) {
    auto out = std::make_unique<Event>(detail::read_id(object, kClassIri));
    for (const auto& [key, value] : object.items()) {
      if (key == "id" || key == "type") continue;
      detail::unknown_member(key, kClassIri);
    }
    return out;
  }
};

inline const bool kEventRegistered = detail::register_type<Event>();

}  // namespace know
