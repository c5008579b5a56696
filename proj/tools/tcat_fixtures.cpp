// Writes every bundled fixture as <dir>/<name>.json.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tcat/document.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: tcat-fixtures <dir>\n";
    return 3;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& name : tcat::fixture_names()) {
    std::ofstream out(dir / (name + ".json"), std::ios::binary);
    out << tcat::serialize(tcat::fixture_document(name));
    if (!out) {
      std::cerr << "cannot write " << name << "\n";
      return 3;
    }
  }
  return 0;
}
