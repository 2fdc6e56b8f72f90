#include <cstring>
#include <iostream>

#include "golden.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: golden_runner DIR [--update]\n";
    return 2;
  }
  const bool update = argc > 2 && std::strcmp(argv[2], "--update") == 0;
  int failed = 0;
  for (const auto& o : golden::run_all(argv[1], update)) {
    std::cout << (o.pass ? "ok   " : "FAIL ") << o.name;
    if (!o.pass) std::cout << "  " << o.detail, ++failed;
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
