#include "knowforge/emit/emit.hpp"

#include <algorithm>
#include <array>

#include "common.hpp"

namespace knowforge::emit {

namespace {

using Renderer = FileSet (*)(const std::vector<codegen::TypeSpec>&, const codegen::TargetProfile&);

struct Entry {
  std::string_view token;
  Renderer render;
};

constexpr std::array<Entry, 6> kRenderers = {{
    {"c", detail::emit_c},
    {"cpp", detail::emit_cpp},
    {"go", detail::emit_go},
    {"py", detail::emit_py},
    {"rs", detail::emit_rs},
    {"ts", detail::emit_ts},
}};

constexpr std::array<std::string_view, 6> kTokens = {"c", "cpp", "go", "py", "rs", "ts"};

void check_path(const std::string& path) {
  const bool bad = path.empty() || path.front() == '/' || path.find('\\') != std::string::npos ||
                   path == ".." || path.starts_with("../") || path.ends_with("/..") ||
                   path.find("/../") != std::string::npos;
  if (bad) throw codegen::GenerationError("renderer produced an invalid path '" + path + "'");
}

}  // namespace

NotImplementedProfile::NotImplementedProfile(std::string token)
    : codegen::GenerationError("NOT_IMPLEMENTED: no renderer for profile '" + token + "'"),
      token_(std::move(token)) {}

std::span<const std::string_view> implemented_tokens() { return kTokens; }

bool is_implemented(std::string_view token) {
  return std::find(kTokens.begin(), kTokens.end(), token) != kTokens.end();
}

FileSet emit(const std::vector<codegen::TypeSpec>& ir, const codegen::TargetProfile& profile) {
  const auto it = std::find_if(kRenderers.begin(), kRenderers.end(),
                               [&](const Entry& e) { return e.token == profile.name; });
  if (it == kRenderers.end()) throw NotImplementedProfile(profile.name);

  FileSet files = it->render(ir, profile);
  for (auto& [path, text] : files) {
    check_path(path);
    while (!text.empty() && text.back() == '\n') text.pop_back();
    text = profile.preamble + text + '\n';
  }
  return files;
}

}  // namespace knowforge::emit
