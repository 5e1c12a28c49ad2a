#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hilb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
};

struct Options {
  std::uint64_t seed = 1;
  // Thread count compared against the single-threaded run in criterion 8.
  unsigned parallel_threads = 8;
};

// Runs the eight acceptance criteria in order. `on_result` is invoked as each
// criterion finishes. Every criterion is evaluated even after a failure.
std::vector<CriterionResult> run_all(const Options& options = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

// "[PASS] 1 published-integers (123 ms): detail"
std::string format_line(const CriterionResult& result);

}  // namespace hilb::acceptance
