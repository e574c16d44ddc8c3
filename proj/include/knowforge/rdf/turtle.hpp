#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "knowforge/rdf/term.hpp"

namespace knowforge::rdf {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation location, const std::string& message);

  SourceLocation location() const { return location_; }
  // Message without the "line:column: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourceLocation location_;
  std::string detail_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UndefinedPrefix : public ParseError {
 public:
  UndefinedPrefix(SourceLocation location, std::string label);
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class RelativeIriWithoutBase : public ParseError {
 public:
  RelativeIriWithoutBase(SourceLocation location, const std::string& reference);
};

// Parses a Turtle document. Supported: @prefix/@base and PREFIX/BASE
// directives, IRIs, prefixed names, blank node labels, `[]` property lists,
// `()` collections, quoted and triple-quoted strings with language tag or
// datatype, numeric and boolean shorthand, `a`, and `#` comments.
//
// Anonymous blank nodes are labelled b0, b1, ... in encounter order, skipping
// any label the document itself uses.
Graph parse_turtle(std::string_view text, const std::optional<Iri>& base = std::nullopt);

// RFC 3986 reference resolution. `reference` may already be absolute.
std::string resolve_iri(std::string_view base, std::string_view reference);

bool is_absolute_iri(std::string_view reference);

}  // namespace knowforge::rdf
