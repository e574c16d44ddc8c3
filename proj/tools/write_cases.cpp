// Writes the interchange cases used by the Python smoke harness.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "smoke_cases.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: knowforge_write_cases <cases-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& c : knowforge::tools::smoke_cases()) {
    std::ofstream(dir / (c.name + ".json"), std::ios::binary) << c.json;
    if (!c.triples.empty()) std::ofstream(dir / (c.name + ".nt"), std::ios::binary) << c.triples;
    std::cout << c.name << "\n";
  }
  return 0;
}
