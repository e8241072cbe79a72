// Runs acceptance criteria 1-10 with the default configuration and prints one
// PASS/FAIL line each. Exit status is nonzero when any criterion fails or
// exceeds its runtime budget.
#include <chrono>
#include <cstdio>
#include <string>

#include "commvar/suites.hpp"

int main() {
  using namespace commvar;
  const SuiteConfig cfg;
  int failures = 0;
  for (unsigned i = 1; i <= kCriterionCount; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const ReportDoc doc = acceptance_criterion(i, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double budget = criterion_budget_seconds(i);
    const bool in_time = secs <= budget;
    const bool pass = doc.status == Status::Pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %u: %s  status=%s  %.2fs (budget %.0fs)\n", i, pass ? "PASS" : "FAIL",
                to_string(doc.status).c_str(), secs, budget);
    if (!pass) std::printf("  %s\n", doc.to_json().dump().substr(0, 2000).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %u criteria failed\n", failures, kCriterionCount);
  return failures == 0 ? 0 : 1;
}
