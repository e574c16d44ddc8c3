#include "knowforge/codegen/naming.hpp"

#include <cctype>

namespace knowforge::codegen {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool valid_word(std::string_view w) {
  if (w.empty() || !is_lower(w[0])) return false;
  for (const char c : w) {
    if (!is_lower(c) && !is_digit(c)) return false;
  }
  return true;
}

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

}  // namespace

WordSequence::WordSequence(std::vector<std::string> words) : words_(std::move(words)) {
  if (words_.empty()) throw InvalidIdentifier("identifier has no words");
  for (const auto& w : words_) {
    if (!valid_word(w)) throw InvalidIdentifier("malformed word '" + w + "'");
  }
}

WordSequence split_words(std::string_view local_name) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (size_t i = 0; i < local_name.size(); ++i) {
    const char c = local_name[i];
    if (c == '_' || c == '-') {
      flush();
      continue;
    }
    if (!is_lower(c) && !is_upper(c) && !is_digit(c)) {
      throw InvalidIdentifier("illegal character in identifier '" + std::string(local_name) + "'");
    }
    if (is_upper(c) && i > 0) {
      const char prev = local_name[i - 1];
      const char next = i + 1 < local_name.size() ? local_name[i + 1] : '\0';
      if (is_lower(prev) || is_digit(prev) || (is_upper(prev) && is_lower(next))) flush();
    }
    current += lower(c);
  }
  flush();
  if (words.empty()) {
    throw InvalidIdentifier("identifier '" + std::string(local_name) + "' has no words");
  }
  for (const auto& w : words) {
    if (!valid_word(w)) {
      throw InvalidIdentifier("identifier '" + std::string(local_name) +
                              "' has a word starting with a digit");
    }
  }
  return WordSequence(std::move(words));
}

std::string apply_convention(const WordSequence& words, NamingConvention convention) {
  const auto& w = words.words();
  std::string out;
  switch (convention) {
    case NamingConvention::kLowerSnake:
    case NamingConvention::kKebab: {
      const char sep = convention == NamingConvention::kKebab ? '-' : '_';
      for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += sep;
        out += w[i];
      }
      return out;
    }
    case NamingConvention::kCamel:
    case NamingConvention::kPascal: {
      const bool camel = convention == NamingConvention::kCamel;
      for (size_t i = 0; i < w.size(); ++i) {
        const bool capitalized = !(camel && i == 0);
        if (i > 0 && w[i - 1].size() == 1 && !(camel && i == 1)) {
          // The previous word rendered as a lone capital; the boundary before
          // this word is only recoverable if it continues in lowercase.
          if (w[i].size() == 1 || is_digit(w[i][1])) out += '_';
        }
        out += capitalized ? upper(w[i][0]) : w[i][0];
        out.append(w[i], 1);
      }
      return out;
    }
  }
  return out;
}

std::string_view to_string(NamingConvention convention) {
  switch (convention) {
    case NamingConvention::kLowerSnake: return "lower_snake";
    case NamingConvention::kCamel: return "camel";
    case NamingConvention::kPascal: return "pascal";
    case NamingConvention::kKebab: return "kebab";
  }
  return "";
}

std::optional<NamingConvention> parse_convention(std::string_view text) {
  for (const auto c : kAllConventions) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

}  // namespace knowforge::codegen
