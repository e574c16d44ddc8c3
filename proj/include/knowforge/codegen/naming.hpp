#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knowforge::codegen {

class InvalidIdentifier : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A non-empty list of words, each matching [a-z][a-z0-9]*.
class WordSequence {
 public:
  // Throws InvalidIdentifier if the list is empty or a word is malformed.
  explicit WordSequence(std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }
  size_t size() const { return words_.size(); }

  friend auto operator<=>(const WordSequence&, const WordSequence&) = default;
  friend bool operator==(const WordSequence&, const WordSequence&) = default;

 private:
  std::vector<std::string> words_;
};

enum class NamingConvention { kLowerSnake, kCamel, kPascal, kKebab };

inline constexpr NamingConvention kAllConventions[] = {
    NamingConvention::kLowerSnake, NamingConvention::kCamel, NamingConvention::kPascal,
    NamingConvention::kKebab};

// Splits an identifier into lowercase words. Boundaries are '_' and '-',
// lower/digit -> Upper transitions, and the last capital of an all-caps run
// that is followed by a lowercase letter ("IRIValue" -> iri, value). Digits
// stay with the preceding word.
WordSequence split_words(std::string_view local_name);

// Renders words in the given convention. In camel and pascal output an '_'
// separates a one-letter word from a following word whose boundary would
// otherwise be lost ("A_B", not "AB"), so split_words always recovers the
// original sequence.
std::string apply_convention(const WordSequence& words, NamingConvention convention);

std::string_view to_string(NamingConvention convention);
std::optional<NamingConvention> parse_convention(std::string_view text);

}  // namespace knowforge::codegen
