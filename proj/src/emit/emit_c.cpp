// Plain C records: one header per type, know.h includes them all.

#include <cctype>

#include "common.hpp"

namespace knowforge::emit::detail {

namespace {

std::string upper_snake(const codegen::WordSequence& words) {
  std::string name = codegen::apply_convention(words, codegen::NamingConvention::kLowerSnake);
  for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

// "const char * *items" -> "const char **items".
std::string tidy_declarators(std::string decl) {
  for (const std::string_view from : {"* *", "* value"}) {
    const std::string to = from == "* *" ? "**" : "*value";
    for (size_t pos = decl.find(from); pos != std::string::npos; pos = decl.find(from, pos)) {
      decl.replace(pos, from.size(), to);
    }
  }
  return decl;
}

std::string type_header(const TypeSpec& type, const TargetProfile& profile) {
  const std::string name = profile.type_name(type.words);
  const std::string g = "KNOW_" + upper_snake(type.words) + "_H";
  std::string out = "\n#ifndef " + g + "\n#define " + g + "\n\n#include \"know.h\"\n\n";
  out += "#define KNOW_" + upper_snake(type.words) + "_IRI " + string_literal(type.class_iri.str()) + "\n\n";
  if (type.doc) {
    out += "/*\n" + doc_block(type, " * ") + " */\n";
  }
  out += "typedef struct " + name + " {\n";
  out += "  const char *id;\n";
  for (const auto& f : type.all_fields) {
    out += "  " + tidy_declarators(field_type(profile, f)) + " " + profile.field_name(f.words) + ";\n";
  }
  out += "} " + name + ";\n\n#endif /* " + g + " */\n";
  return out;
}

}  // namespace

FileSet emit_c(const std::vector<TypeSpec>& ir, const TargetProfile& profile) {
  FileSet files;
  for (const auto& t : ir) add_file(files, profile.file_name(t.words), type_header(t, profile));

  std::string manifest =
      "\n#ifndef KNOW_H\n#define KNOW_H\n\n"
      "#include <stdbool.h>\n#include <stddef.h>\n#include <stdint.h>\n";
  const auto types = by_type_name(ir, profile);
  if (!types.empty()) manifest += "\n";
  for (const TypeSpec* t : types) manifest += "#include \"" + profile.file_name(t->words) + "\"\n";
  manifest += "\n#define KNOW_TYPE_COUNT " + std::to_string(types.size()) + "\n";
  if (!types.empty()) {
    manifest += "\n/* Type names, sorted. */\n#define KNOW_TYPE_NAMES";
    for (const TypeSpec* t : types) manifest += " \\\n  " + string_literal(profile.type_name(t->words)) + ",";
    manifest += "\n";
  }
  manifest += "\n#endif /* KNOW_H */\n";
  add_file(files, "know.h", std::move(manifest));
  return files;
}

}  // namespace knowforge::emit::detail
