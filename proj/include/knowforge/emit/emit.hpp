#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knowforge/codegen/ir.hpp"
#include "knowforge/codegen/profile.hpp"

namespace knowforge::emit {

// Relative '/'-separated path to file contents, ordered by path.
using FileSet = std::map<std::string, std::string>;

class NotImplementedProfile : public codegen::GenerationError {
 public:
  explicit NotImplementedProfile(std::string token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Profile tokens with a renderer, sorted.
std::span<const std::string_view> implemented_tokens();
bool is_implemented(std::string_view token);

// One file per TypeSpec plus the profile's manifest. Every file starts with
// profile.preamble and ends in exactly one newline.
//
// Throws NotImplementedProfile for profiles that only ship as data.
FileSet emit(const std::vector<codegen::TypeSpec>& ir, const codegen::TargetProfile& profile);

// Writes `files` to `dir`, replacing it. The tree is staged in a sibling
// directory and renamed into place, so a failure leaves `dir` untouched.
// Throws std::filesystem::filesystem_error.
void write_tree(const FileSet& files, const std::filesystem::path& dir);

}  // namespace knowforge::emit
