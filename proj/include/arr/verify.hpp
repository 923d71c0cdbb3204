#pragma once

// The acceptance checks, grouped into suites. Each check runs to completion
// and collects every mismatch instead of stopping at the first one.

#include <string>
#include <string_view>
#include <vector>

#include "arr/config.hpp"

namespace arr {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string suite;
  bool passed = false;
  /// Empty on success; otherwise one line per mismatch.
  std::vector<std::string> failures;
  double seconds = 0;
  double budget_seconds = 0;
};

/// linial, shi, catalan, semigeneric, series, roots, oracle.
std::vector<std::string> suite_names();
/// Runs the checks of one suite ("all" runs every check) in id order.
/// Throws PreconditionError for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, const EngineConfig& config = {});
/// Runs a single check by id (1-10).
CheckResult run_check(int id, const EngineConfig& config = {});

}  // namespace arr
