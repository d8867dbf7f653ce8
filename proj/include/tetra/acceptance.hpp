#pragma once

#include <string>
#include <vector>

namespace tetra::acceptance {

struct Options {
  /// Directory holding independence_moisil_a_n6.txt.
  std::string golden_dir;
  /// Write the golden file from this run instead of comparing against it.
  bool write_golden = false;
  /// Restrict to these ids ("AC1".."AC10"); empty runs all.
  std::vector<std::string> only;
};

Options default_options();

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> details;
};

std::vector<CriterionResult> run_all(const Options& options = default_options());

/// "AC1 PASS golden tables [0.01 s / limit 1 s]" plus indented details.
std::string format_result(const CriterionResult& result);

}  // namespace tetra::acceptance
