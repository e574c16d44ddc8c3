#include "knowforge/rdf/turtle.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace knowforge::rdf {

ParseError::ParseError(SourceLocation location, const std::string& message)
    : std::runtime_error(std::to_string(location.line) + ":" + std::to_string(location.column) +
                         ": " + message),
      location_(location),
      detail_(message) {}

UndefinedPrefix::UndefinedPrefix(SourceLocation location, std::string label)
    : ParseError(location, "undefined prefix '" + label + ":'"), label_(std::move(label)) {}

RelativeIriWithoutBase::RelativeIriWithoutBase(SourceLocation location,
                                               const std::string& reference)
    : ParseError(location, "relative IRI <" + reference + "> with no base IRI in effect") {}

// ---------------------------------------------------------------------------
// IRI reference resolution

namespace {

struct IriParts {
  std::string scheme;
  bool has_scheme = false;
  std::string authority;
  bool has_authority = false;
  std::string path;
  std::string query;
  bool has_query = false;
  std::string fragment;
  bool has_fragment = false;
};

size_t scheme_length(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return 0;
  for (size_t i = 1; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c == ':') return i;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return 0;
  }
  return 0;
}

IriParts split_iri(std::string_view s) {
  IriParts p;
  if (const size_t n = scheme_length(s); n > 0) {
    p.has_scheme = true;
    p.scheme = std::string(s.substr(0, n));
    s.remove_prefix(n + 1);
  }
  if (s.starts_with("//")) {
    s.remove_prefix(2);
    const size_t end = s.find_first_of("/?#");
    p.has_authority = true;
    p.authority = std::string(s.substr(0, end));
    s.remove_prefix(end == std::string_view::npos ? s.size() : end);
  }
  const size_t path_end = s.find_first_of("?#");
  p.path = std::string(s.substr(0, path_end));
  s.remove_prefix(path_end == std::string_view::npos ? s.size() : path_end);
  if (s.starts_with('?')) {
    s.remove_prefix(1);
    const size_t end = s.find('#');
    p.has_query = true;
    p.query = std::string(s.substr(0, end));
    s.remove_prefix(end == std::string_view::npos ? s.size() : end);
  }
  if (s.starts_with('#')) {
    p.has_fragment = true;
    p.fragment = std::string(s.substr(1));
  }
  return p;
}

std::string remove_dot_segments(std::string_view in) {
  std::string input(in);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input == "/.." ? std::string("/") : input.substr(3);
      const size_t cut = output.rfind('/');
      output.erase(cut == std::string::npos ? 0 : cut);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      const size_t start = input.starts_with('/') ? 1 : 0;
      const size_t end = input.find('/', start);
      output += input.substr(0, end);
      input.erase(0, end == std::string::npos ? input.size() : end);
    }
  }
  return output;
}

std::string merge_paths(const IriParts& base, std::string_view ref_path) {
  if (base.has_authority && base.path.empty()) {
    return "/" + std::string(ref_path);
  }
  const size_t slash = base.path.rfind('/');
  if (slash == std::string::npos) return std::string(ref_path);
  return base.path.substr(0, slash + 1) + std::string(ref_path);
}

std::string recompose(const IriParts& p) {
  std::string out;
  if (p.has_scheme) out += p.scheme + ":";
  if (p.has_authority) out += "//" + p.authority;
  out += p.path;
  if (p.has_query) out += "?" + p.query;
  if (p.has_fragment) out += "#" + p.fragment;
  return out;
}

}  // namespace

bool is_absolute_iri(std::string_view reference) { return scheme_length(reference) > 0; }

std::string resolve_iri(std::string_view base, std::string_view reference) {
  const IriParts r = split_iri(reference);
  if (r.has_scheme) return std::string(reference);
  const IriParts b = split_iri(base);
  IriParts t;
  t.has_scheme = b.has_scheme;
  t.scheme = b.scheme;
  if (r.has_authority) {
    t.has_authority = true;
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.has_query = r.has_query;
    t.query = r.query;
  } else {
    t.has_authority = b.has_authority;
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.has_query = r.has_query || b.has_query;
      t.query = r.has_query ? r.query : b.query;
    } else {
      t.path = r.path.starts_with('/') ? remove_dot_segments(r.path)
                                       : remove_dot_segments(merge_paths(b, r.path));
      t.has_query = r.has_query;
      t.query = r.query;
    }
  }
  t.has_fragment = r.has_fragment;
  t.fragment = r.fragment;
  return recompose(t);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  kIriRef,
  kPName,
  kBlankLabel,
  kString,
  kInteger,
  kDecimal,
  kDouble,
  kAtWord,
  kA,
  kTrue,
  kFalse,
  kSparqlPrefix,
  kSparqlBase,
  kDot,
  kSemicolon,
  kComma,
  kLBracket,
  kRBracket,
  kLParen,
  kRParen,
  kCarets,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;   // decoded content; for kPName the local part
  std::string prefix; // kPName only
  SourceLocation loc;
};

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

// PN_CHARS_BASE, approximated: ASCII letters plus any non-ASCII code point.
bool is_pn_base(char c) { return is_alpha(c) || is_high(c); }
bool is_pn_u(char c) { return is_pn_base(c) || c == '_'; }
bool is_pn(char c) { return is_pn_u(c) || c == '-' || is_digit(c); }

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    validate_utf8();
    std::vector<Token> tokens;
    for (;;) {
      skip_ws_and_comments();
      Token t = next();
      tokens.push_back(std::move(t));
      if (tokens.back().kind == Tok::kEnd) break;
    }
    return tokens;
  }

 private:
  struct Cursor {
    size_t pos = 0;
    int line = 1;
    int column = 1;
  };

  std::string_view text_;
  Cursor cur_;

  bool at_end() const { return cur_.pos >= text_.size(); }
  char peek(size_t ahead = 0) const {
    const size_t i = cur_.pos + ahead;
    return i < text_.size() ? text_[i] : '\0';
  }
  bool has(size_t ahead) const { return cur_.pos + ahead < text_.size(); }
  SourceLocation loc() const { return {cur_.line, cur_.column}; }

  char advance() {
    const char c = text_[cur_.pos++];
    if (c == '\n') {
      ++cur_.line;
      cur_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++cur_.column;
    }
    return c;
  }

  [[noreturn]] void fail(SourceLocation at, const std::string& message) const {
    throw SyntaxError(at, message);
  }

  void validate_utf8() {
    Cursor saved = cur_;
    while (!at_end()) {
      const SourceLocation at = loc();
      const auto c = static_cast<unsigned char>(peek());
      int extra = 0;
      if (c < 0x80) {
        extra = 0;
      } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
        extra = 1;
      } else if ((c & 0xF0) == 0xE0) {
        extra = 2;
      } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
        extra = 3;
      } else {
        fail(at, "invalid UTF-8 byte");
      }
      advance();
      for (int i = 0; i < extra; ++i) {
        if (at_end() || (static_cast<unsigned char>(peek()) & 0xC0) != 0x80) {
          fail(at, "truncated UTF-8 sequence");
        }
        advance();
      }
    }
    cur_ = saved;
  }

  void skip_ws_and_comments() {
    while (!at_end()) {
      if (is_ws(peek())) {
        advance();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token make(Tok kind, SourceLocation at, std::string text = {}) {
    return Token{kind, std::move(text), {}, at};
  }

  Token next() {
    const SourceLocation at = loc();
    if (at_end()) return make(Tok::kEnd, at);
    const char c = peek();
    switch (c) {
      case '<': return iriref();
      case '"':
      case '\'': return string_literal();
      case '.':
        if (is_digit(peek(1))) return number();
        advance();
        return make(Tok::kDot, at);
      case ';': advance(); return make(Tok::kSemicolon, at);
      case ',': advance(); return make(Tok::kComma, at);
      case '[': advance(); return make(Tok::kLBracket, at);
      case ']': advance(); return make(Tok::kRBracket, at);
      case '(': advance(); return make(Tok::kLParen, at);
      case ')': advance(); return make(Tok::kRParen, at);
      case '^':
        if (peek(1) == '^') {
          advance();
          advance();
          return make(Tok::kCarets, at);
        }
        fail(at, "expected '^^'");
      case '@': return at_word();
      default: break;
    }
    if (is_digit(c) || c == '+' || c == '-') return number();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == ':' || is_pn_base(c)) return name();
    fail(at, std::string("unexpected character '") + c + "'");
  }

  char32_t read_uchar(SourceLocation at) {
    // Cursor is on 'u' or 'U' following a backslash.
    const int digits = advance() == 'u' ? 4 : 8;
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end() || !is_hex(peek())) fail(at, "malformed unicode escape");
      const char h = advance();
      const int v = is_digit(h) ? h - '0' : (std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
      cp = cp * 16 + static_cast<char32_t>(v);
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail(at, "unicode escape is not a valid code point");
    }
    return cp;
  }

  Token iriref() {
    const SourceLocation at = loc();
    advance();  // '<'
    std::string out;
    for (;;) {
      if (at_end()) fail(at, "unterminated IRI");
      const SourceLocation here = loc();
      const char c = advance();
      if (c == '>') break;
      if (c == '\\') {
        if (peek() != 'u' && peek() != 'U') fail(here, "only \\u and \\U escapes are allowed in IRIs");
        const char32_t cp = read_uchar(here);
        if (cp <= 0x20 || cp == '<' || cp == '>' || cp == '"' || cp == '{' || cp == '}' ||
            cp == '|' || cp == '^' || cp == '`' || cp == '\\') {
          fail(here, "escaped character not allowed in IRI");
        }
        append_utf8(out, cp);
        continue;
      }
      const auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`') {
        fail(here, "character not allowed in IRI");
      }
      out += c;
    }
    return make(Tok::kIriRef, at, std::move(out));
  }

  Token string_literal() {
    const SourceLocation at = loc();
    const char q = peek();
    const bool long_form = peek(1) == q && peek(2) == q;
    if (long_form) {
      advance();
      advance();
      advance();
    } else {
      advance();
    }
    std::string out;
    for (;;) {
      if (at_end()) fail(at, "unterminated string literal");
      const SourceLocation here = loc();
      const char c = peek();
      if (c == q) {
        if (!long_form) {
          advance();
          break;
        }
        if (peek(1) == q && peek(2) == q) {
          advance();
          advance();
          advance();
          break;
        }
        out += advance();
        continue;
      }
      if (c == '\\') {
        advance();
        if (at_end()) fail(here, "unterminated escape");
        const char e = peek();
        switch (e) {
          case 't': out += '\t'; advance(); break;
          case 'b': out += '\b'; advance(); break;
          case 'n': out += '\n'; advance(); break;
          case 'r': out += '\r'; advance(); break;
          case 'f': out += '\f'; advance(); break;
          case '"': out += '"'; advance(); break;
          case '\'': out += '\''; advance(); break;
          case '\\': out += '\\'; advance(); break;
          case 'u':
          case 'U': append_utf8(out, read_uchar(here)); break;
          default: fail(here, std::string("unknown escape '\\") + e + "'");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail(here, "line break in short string literal");
      out += advance();
    }
    return make(Tok::kString, at, std::move(out));
  }

  Token at_word() {
    const SourceLocation at = loc();
    advance();  // '@'
    std::string word;
    while (is_alpha(peek())) word += advance();
    if (word.empty()) fail(at, "expected a directive or language tag after '@'");
    while (peek() == '-' && (is_alpha(peek(1)) || is_digit(peek(1)))) {
      word += advance();
      while (is_alpha(peek()) || is_digit(peek())) word += advance();
    }
    return make(Tok::kAtWord, at, std::move(word));
  }

  Token number() {
    const SourceLocation at = loc();
    std::string out;
    if (peek() == '+' || peek() == '-') out += advance();
    bool int_digits = false;
    while (is_digit(peek())) {
      out += advance();
      int_digits = true;
    }
    bool frac_digits = false;
    bool has_dot = false;
    // A '.' only belongs to the number if digits or an exponent follow.
    if (peek() == '.' &&
        (is_digit(peek(1)) || ((peek(1) == 'e' || peek(1) == 'E') && int_digits))) {
      has_dot = true;
      out += advance();
      while (is_digit(peek())) {
        out += advance();
        frac_digits = true;
      }
    }
    if (!int_digits && !frac_digits) fail(at, "malformed number");
    if (peek() == 'e' || peek() == 'E') {
      std::string exp(1, advance());
      if (peek() == '+' || peek() == '-') exp += advance();
      if (!is_digit(peek())) fail(at, "malformed exponent");
      while (is_digit(peek())) exp += advance();
      return make(Tok::kDouble, at, out + exp);
    }
    if (has_dot) return make(Tok::kDecimal, at, std::move(out));
    return make(Tok::kInteger, at, std::move(out));
  }

  Token blank_label() {
    const SourceLocation at = loc();
    advance();
    advance();  // "_:"
    if (!(is_pn_u(peek()) || is_digit(peek()))) fail(at, "malformed blank node label");
    std::string out(1, advance());
    Cursor last_good = cur_;
    size_t good_len = out.size();
    while (is_pn(peek()) || peek() == '.') {
      const char c = advance();
      out += c;
      if (c != '.') {
        last_good = cur_;
        good_len = out.size();
      }
    }
    out.resize(good_len);
    cur_ = last_good;
    return make(Tok::kBlankLabel, at, std::move(out));
  }

  Token name() {
    const SourceLocation at = loc();
    std::string prefix;
    if (peek() != ':') {
      prefix += advance();
      while (is_pn(peek()) || peek() == '.') prefix += advance();
    }
    if (peek() != ':') {
      // Bare word; a trailing '.' is the statement terminator.
      while (!prefix.empty() && prefix.back() == '.') {
        prefix.pop_back();
        --cur_.pos;
        --cur_.column;
      }
      if (prefix == "a") return make(Tok::kA, at);
      if (prefix == "true") return make(Tok::kTrue, at);
      if (prefix == "false") return make(Tok::kFalse, at);
      std::string upper;
      for (const char c : prefix) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (upper == "PREFIX") return make(Tok::kSparqlPrefix, at);
      if (upper == "BASE") return make(Tok::kSparqlBase, at);
      fail(at, "unexpected word '" + prefix + "'");
    }
    if (!prefix.empty() && prefix.back() == '.') fail(at, "prefix must not end with '.'");
    advance();  // ':'
    std::string local;
    Cursor last_good = cur_;
    size_t good_len = 0;
    bool first = true;
    for (;;) {
      const char c = peek();
      const SourceLocation here = loc();
      if (c == '%') {
        if (!is_hex(peek(1)) || !is_hex(peek(2))) fail(here, "malformed percent escape");
        local += advance();
        local += advance();
        local += advance();
      } else if (c == '\\') {
        static constexpr std::string_view kEscapable = "_~.-!$&'()*+,;=/?#@%";
        if (kEscapable.find(peek(1)) == std::string_view::npos || !has(1)) {
          fail(here, "malformed local name escape");
        }
        advance();
        local += advance();
      } else if (is_pn_u(c) || is_digit(c) || c == ':' || (!first && (c == '-' || c == '.'))) {
        local += advance();
        if (c == '.') {
          first = false;
          continue;
        }
      } else {
        break;
      }
      first = false;
      last_good = cur_;
      good_len = local.size();
    }
    local.resize(good_len);
    cur_ = last_good;
    Token t = make(Tok::kPName, at, std::move(local));
    t.prefix = std::move(prefix);
    return t;
  }
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::optional<Iri>& base) : tokens_(std::move(tokens)) {
    if (base) base_ = base->str();
    for (const auto& t : tokens_) {
      if (t.kind == Tok::kBlankLabel) used_labels_.insert(t.text);
    }
  }

  Graph run() {
    while (peek().kind != Tok::kEnd) statement();
    if (base_) graph_.base = Iri(*base_);
    return std::move(graph_);
  }

 private:
  std::vector<Token> tokens_;
  size_t index_ = 0;
  Graph graph_;
  std::optional<std::string> base_;
  std::set<std::string> used_labels_;
  size_t next_blank_ = 0;

  const Token& peek(size_t ahead = 0) const {
    const size_t i = std::min(index_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& take() {
    const Token& t = tokens_[index_];
    if (t.kind != Tok::kEnd) ++index_;
    return t;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw SyntaxError(t.loc, message);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    return take();
  }

  BlankNode fresh_blank() {
    for (;;) {
      std::string label = "b" + std::to_string(next_blank_++);
      if (!used_labels_.contains(label)) return BlankNode{std::move(label)};
    }
  }

  void emit(const Subject& s, const Iri& p, Term o) {
    graph_.triples.push_back(Triple{s, p, std::move(o)});
  }

  std::string resolve(const Token& t, const std::string& reference) const {
    if (is_absolute_iri(reference)) return reference;
    if (!base_) throw RelativeIriWithoutBase(t.loc, reference);
    return resolve_iri(*base_, reference);
  }

  void statement() {
    const Token& t = peek();
    if (t.kind == Tok::kAtWord) {
      if (t.text == "prefix") {
        take();
        prefix_body();
        expect(Tok::kDot, "'.' after @prefix directive");
        return;
      }
      if (t.text == "base") {
        take();
        base_body();
        expect(Tok::kDot, "'.' after @base directive");
        return;
      }
      fail(t, "unknown directive '@" + t.text + "'");
    }
    if (t.kind == Tok::kSparqlPrefix) {
      take();
      prefix_body();
      return;
    }
    if (t.kind == Tok::kSparqlBase) {
      take();
      base_body();
      return;
    }
    triples();
    expect(Tok::kDot, "'.' at end of statement");
  }

  void prefix_body() {
    const Token& name = peek();
    if (name.kind != Tok::kPName || !name.text.empty()) fail(name, "expected prefix label ending in ':'");
    take();
    const Token& iri = expect(Tok::kIriRef, "IRI after prefix label");
    graph_.prefixes.insert_or_assign(name.prefix, Iri(resolve(iri, iri.text)));
  }

  void base_body() {
    const Token& iri = expect(Tok::kIriRef, "IRI after base directive");
    base_ = resolve(iri, iri.text);
  }

  void triples() {
    if (peek().kind == Tok::kLBracket) {
      if (peek(1).kind == Tok::kRBracket) {
        take();
        take();
        const BlankNode subject = fresh_blank();
        predicate_object_list(subject);
        return;
      }
      const BlankNode subject = blank_property_list();
      if (peek().kind != Tok::kDot) predicate_object_list(subject);
      return;
    }
    const Subject subject = parse_subject();
    predicate_object_list(subject);
  }

  Subject parse_subject() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIriRef:
      case Tok::kPName: return iri();
      case Tok::kBlankLabel: take(); return BlankNode{t.text};
      case Tok::kLParen: {
        const Term head = collection();
        if (const auto* iri = std::get_if<Iri>(&head)) return *iri;
        return std::get<BlankNode>(head);
      }
      default: fail(t, "expected subject");
    }
  }

  Iri iri() {
    const Token& t = take();
    if (t.kind == Tok::kIriRef) return Iri(resolve(t, t.text));
    if (t.kind == Tok::kPName) {
      const auto it = graph_.prefixes.find(t.prefix);
      if (it == graph_.prefixes.end()) throw UndefinedPrefix(t.loc, t.prefix);
      return Iri(it->second.str() + t.text);
    }
    fail(t, "expected IRI");
  }

  Iri verb() {
    if (peek().kind == Tok::kA) {
      take();
      return ns::rdf("type");
    }
    if (peek().kind == Tok::kIriRef || peek().kind == Tok::kPName) return iri();
    fail(peek(), "expected predicate");
  }

  void predicate_object_list(const Subject& subject) {
    for (;;) {
      const Iri predicate = verb();
      object_list(subject, predicate);
      if (peek().kind != Tok::kSemicolon) return;
      while (peek().kind == Tok::kSemicolon) take();
      const Tok k = peek().kind;
      if (k != Tok::kA && k != Tok::kIriRef && k != Tok::kPName) return;
    }
  }

  void object_list(const Subject& subject, const Iri& predicate) {
    for (;;) {
      Term o = object();
      emit(subject, predicate, std::move(o));
      if (peek().kind != Tok::kComma) return;
      take();
    }
  }

  BlankNode blank_property_list() {
    expect(Tok::kLBracket, "'['");
    const BlankNode node = fresh_blank();
    predicate_object_list(node);
    expect(Tok::kRBracket, "']'");
    return node;
  }

  Term collection() {
    expect(Tok::kLParen, "'('");
    std::optional<BlankNode> head;
    std::optional<BlankNode> previous;
    while (peek().kind != Tok::kRParen) {
      if (peek().kind == Tok::kEnd) fail(peek(), "unterminated collection");
      BlankNode node = fresh_blank();
      Term item = object();
      emit(node, ns::rdf("first"), std::move(item));
      if (previous) {
        emit(*previous, ns::rdf("rest"), node);
      } else {
        head = node;
      }
      previous = std::move(node);
    }
    take();
    if (!head) return ns::rdf("nil");
    emit(*previous, ns::rdf("rest"), ns::rdf("nil"));
    return *head;
  }

  Term object() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIriRef:
      case Tok::kPName: return iri();
      case Tok::kBlankLabel: take(); return BlankNode{t.text};
      case Tok::kLBracket:
        if (peek(1).kind == Tok::kRBracket) {
          take();
          take();
          return fresh_blank();
        }
        return blank_property_list();
      case Tok::kLParen: return collection();
      case Tok::kString: return string_literal();
      case Tok::kInteger: take(); return make_literal(t.text, ns::xsd("integer"));
      case Tok::kDecimal: take(); return make_literal(t.text, ns::xsd("decimal"));
      case Tok::kDouble: take(); return make_literal(t.text, ns::xsd("double"));
      case Tok::kTrue: take(); return make_literal("true", ns::xsd("boolean"));
      case Tok::kFalse: take(); return make_literal("false", ns::xsd("boolean"));
      default: fail(t, "expected object");
    }
  }

  Term string_literal() {
    const Token& t = take();
    std::string lexical = t.text;
    if (peek().kind == Tok::kAtWord) {
      return make_lang_literal(std::move(lexical), take().text);
    }
    if (peek().kind == Tok::kCarets) {
      take();
      if (peek().kind != Tok::kIriRef && peek().kind != Tok::kPName) fail(peek(), "expected datatype IRI");
      return make_literal(std::move(lexical), iri());
    }
    return make_literal(std::move(lexical), ns::xsd("string"));
  }
};

}  // namespace

Graph parse_turtle(std::string_view text, const std::optional<Iri>& base) {
  Lexer lexer(text);
  Parser parser(lexer.run(), base);
  return parser.run();
}

}  // namespace knowforge::rdf
