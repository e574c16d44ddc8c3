#pragma once

// Helpers shared by the per-language renderers.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knowforge/codegen/ir.hpp"
#include "knowforge/emit/emit.hpp"

namespace knowforge::emit::detail {

using codegen::Cardinality;
using codegen::FieldSpec;
using codegen::ScalarKind;
using codegen::TargetProfile;
using codegen::TypeSpec;
using rdf::Iri;

// Member name in the JSON shape.
std::string json_key(const FieldSpec& field);

// Fields in JSON member order.
std::vector<const FieldSpec*> by_json_key(const std::vector<FieldSpec>& fields);

// Scalar kind carried by the field; references travel as IRIs.
ScalarKind value_kind(const FieldSpec& field);

// Target type of one element, and of the whole field after applying the
// optional or collection template.
std::string element_type(const TargetProfile& profile, const FieldSpec& field);
std::string field_type(const TargetProfile& profile, const FieldSpec& field);

bool is_single(const FieldSpec& field);

// Types sorted by rendered type name, as listed in manifests.
std::vector<const TypeSpec*> by_type_name(const std::vector<TypeSpec>& ir,
                                          const TargetProfile& profile);

// Inserts a file; two files with one path is a GenerationError.
void add_file(FileSet& files, std::string path, std::string text);

// Double-quoted literal with C-style escapes; valid in every target here.
std::string string_literal(std::string_view text);

// Splits documentation into lines no wider than `width`.
std::vector<std::string> wrap(std::string_view text, size_t width);

// "<prefix>line" for each wrapped line of the type's doc, or nothing.
std::string doc_block(const TypeSpec& type, std::string_view prefix, size_t width = 76);

FileSet emit_c(const std::vector<TypeSpec>& ir, const TargetProfile& profile);
FileSet emit_cpp(const std::vector<TypeSpec>& ir, const TargetProfile& profile);
FileSet emit_go(const std::vector<TypeSpec>& ir, const TargetProfile& profile);
FileSet emit_py(const std::vector<TypeSpec>& ir, const TargetProfile& profile);
FileSet emit_rs(const std::vector<TypeSpec>& ir, const TargetProfile& profile);
FileSet emit_ts(const std::vector<TypeSpec>& ir, const TargetProfile& profile);

}  // namespace knowforge::emit::detail
