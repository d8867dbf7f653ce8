// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <iostream>
#include <string>

#include "tetra/acceptance.hpp"

int main(int argc, char** argv) {
  auto options = tetra::acceptance::default_options();
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--write-golden") {
      options.write_golden = true;
    } else {
      options.only.push_back(arg);
    }
  }
  bool ok = true;
  for (const auto& r : tetra::acceptance::run_all(options)) {
    std::cout << tetra::acceptance::format_result(r) << std::flush;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
