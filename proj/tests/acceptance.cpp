// One line per acceptance criterion; exit status is the number of failures.

#include <cstdio>

#include "arr/verify.hpp"

int main() {
  arr::EngineConfig config;
  config.threads = arr::threads_from_environment();
  int failed = 0;
  for (const auto& r : arr::run_suite("all", config)) {
    std::printf("[%s] criterion %2d  %-36s %8.3f s (budget %.0f s)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.budget_seconds);
    for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
    failed += !r.passed;
  }
  return failed;
}
