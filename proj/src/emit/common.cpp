#include "common.hpp"

#include <algorithm>
#include <cstdio>

namespace knowforge::emit::detail {

std::string json_key(const FieldSpec& field) {
  return codegen::apply_convention(field.words, codegen::NamingConvention::kCamel);
}

std::vector<const FieldSpec*> by_json_key(const std::vector<FieldSpec>& fields) {
  std::vector<const FieldSpec*> out;
  for (const auto& f : fields) out.push_back(&f);
  std::sort(out.begin(), out.end(),
            [](const FieldSpec* a, const FieldSpec* b) { return json_key(*a) < json_key(*b); });
  return out;
}

ScalarKind value_kind(const FieldSpec& field) {
  if (field.is_reference()) return ScalarKind::kIri;
  return std::get<ScalarKind>(field.value);
}

std::string element_type(const TargetProfile& profile, const FieldSpec& field) {
  return profile.scalar(value_kind(field));
}

std::string field_type(const TargetProfile& profile, const FieldSpec& field) {
  const std::string element = element_type(profile, field);
  return is_single(field) ? profile.optional_of(element) : profile.collection_of(element);
}

bool is_single(const FieldSpec& field) { return field.cardinality == Cardinality::kOptionalSingle; }

std::vector<const TypeSpec*> by_type_name(const std::vector<TypeSpec>& ir,
                                          const TargetProfile& profile) {
  std::vector<const TypeSpec*> out;
  for (const auto& t : ir) out.push_back(&t);
  std::sort(out.begin(), out.end(), [&](const TypeSpec* a, const TypeSpec* b) {
    return profile.type_name(a->words) < profile.type_name(b->words);
  });
  return out;
}

void add_file(FileSet& files, std::string path, std::string text) {
  const auto [it, inserted] = files.emplace(std::move(path), std::move(text));
  if (!inserted) throw codegen::GenerationError("two generated files share the path '" + it->first + "'");
}

std::string string_literal(std::string_view text) {
  std::string out = "\"";
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::vector<std::string> wrap(std::string_view text, size_t width) {
  std::vector<std::string> lines;
  std::string line;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\n' && text[end] != '\t') ++end;
    const std::string_view word = text.substr(pos, end - pos);
    if (!line.empty() && line.size() + 1 + word.size() > width) {
      lines.push_back(std::move(line));
      line.clear();
    }
    if (!line.empty()) line += ' ';
    line += word;
    pos = end;
  }
  if (!line.empty()) lines.push_back(std::move(line));
  return lines;
}

std::string doc_block(const TypeSpec& type, std::string_view prefix, size_t width) {
  if (!type.doc) return "";
  std::string out;
  for (const auto& line : wrap(*type.doc, width)) {
    out += prefix;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace knowforge::emit::detail
