// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

#pragma once

#define KNOW_HPP_RUNTIME_ONLY
#include "know.hpp"
#undef KNOW_HPP_RUNTIME_ONLY
#include "event.hpp"

namespace know {

class Appointment : public Event {
 public:
  static constexpr std::string_view kClassIri = "https://know.dev/Appointment";

  explicit Appointment(std::string id) : Event(std::move(id)) {}

  std::string_view class_iri() const override { return kClassIri; }

  std::string to_json() const override {
    detail::JsonWriter w(id(), kClassIri);
    return w.finish();
  }

  std::string to_triples() const override {
    detail::TripleWriter w(id(), kClassIri);
    return w.finish();
  }

  static Appointment from_json(std::string_view text) {
    return std::move(*from_json_object(detail::parse(text)));
  }

  static std::unique_ptr<Appointment> from_json_object(const nlohmann::json& object) {
    auto out = std::make_unique<Appointment>(detail::read_id(object, kClassIri));
    for (const auto& [key, value] : object.items()) {
      if (key == "id" || key == "type") continue;
      detail::unknown_member(key, kClassIri);
    }
    return out;
  }
};

inline const bool kAppointmentRegistered = detail::register_type<Appointment>();

}  // namespace know
