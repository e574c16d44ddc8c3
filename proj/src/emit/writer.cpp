#include <fstream>
#include <random>

#include "knowforge/emit/emit.hpp"

namespace knowforge::emit {

namespace fs = std::filesystem;

void write_tree(const FileSet& files, const fs::path& dir) {
  const fs::path parent = dir.has_parent_path() ? dir.parent_path() : fs::path(".");
  fs::create_directories(parent);

  std::random_device seed;
  const fs::path stage = parent / (".stage-" + dir.filename().string() + "-" +
                                   std::to_string(seed() & 0xffffffu));
  try {
    for (const auto& [path, text] : files) {
      const fs::path target = stage / fs::path(path);
      fs::create_directories(target.parent_path());
      std::ofstream out(target, std::ios::binary | std::ios::trunc);
      out.write(text.data(), static_cast<std::streamsize>(text.size()));
      out.close();
      if (!out) {
        throw fs::filesystem_error("cannot write", target,
                                   std::make_error_code(std::errc::io_error));
      }
    }
    fs::create_directories(stage);  // an empty FileSet still yields a directory
    fs::remove_all(dir);
    fs::rename(stage, dir);
  } catch (...) {
    std::error_code ignored;
    fs::remove_all(stage, ignored);
    throw;
  }
}

}  // namespace knowforge::emit
