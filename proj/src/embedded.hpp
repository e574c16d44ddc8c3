#pragma once

#include <span>
#include <string_view>

namespace knowforge::embedded {

struct File {
  std::string_view name;
  std::string_view text;
};

std::span<const File> vocabulary_files();
std::span<const File> profile_files();

}  // namespace knowforge::embedded
