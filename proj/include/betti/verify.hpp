#pragma once

// Invariant suites for every module, run at a configurable scale. Backs the
// `verify` subcommand.

#include <cstdint>
#include <string>
#include <vector>

namespace betti {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t checks = 0;
  /// First failure, empty when the suite passed.
  std::string detail;
};

struct VerifyConfig {
  std::int64_t max_n = 40;
  std::int64_t oracle_cap = 60;
};

std::vector<SuiteResult> run_invariant_suites(const VerifyConfig& config);

}  // namespace betti
