// Regenerates the bundled datasets under data/. The committed files are this
// tool's output; a test keeps them in sync.
#include <iostream>

#include "fixture_data.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path directory = argc > 1 ? argv[1] : "data";
  try {
    citerank::fixtures::write_all(directory);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "fixtures written to " << directory << '\n';
  return 0;
}
