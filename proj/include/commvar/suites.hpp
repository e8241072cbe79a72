#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "commvar/report.hpp"

namespace commvar {

/// Thrown for malformed configuration; the CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string algebra = "A1";
  std::uint64_t seed = 0xC0FFEE;
  long height_bound = 7;
  unsigned max_total_degree = 6;
  unsigned max_l_rc = 30;
  unsigned max_l_psi = 25;
  /// Sample count for the dim V_{x,y} scan.
  unsigned samples = 1000;
  unsigned jobs = 1;
  /// Enables the sl3 complex computations.
  bool long_run = false;
  bool timing = false;
  /// Acceptance criteria run by verify-all (1..10).
  std::vector<unsigned> criteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

  /// Unknown keys and out-of-range values throw ConfigError.
  static SuiteConfig from_json(const Json& j);
  Json to_json() const;
  void validate() const;
};

inline constexpr unsigned kCriterionCount = 10;

/// Subcommand names in CLI order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Capability limits become skipped reports and unexpected
/// exceptions become failures, so a suite always returns its documents.
std::vector<ReportDoc> run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<ReportDoc> run_algebra_info(const SuiteConfig& cfg);
std::vector<ReportDoc> run_invariants(const SuiteConfig& cfg);
std::vector<ReportDoc> run_poisson(const SuiteConfig& cfg);
std::vector<ReportDoc> run_charmod(const SuiteConfig& cfg);
std::vector<ReportDoc> run_scheme(const SuiteConfig& cfg);
std::vector<ReportDoc> run_complexes(const SuiteConfig& cfg);
std::vector<ReportDoc> run_comb(const SuiteConfig& cfg);
/// The acceptance criteria selected in cfg.criteria, one document each.
std::vector<ReportDoc> run_verify_all(const SuiteConfig& cfg);

/// Criterion i (1..10); the witness holds the underlying reports.
ReportDoc acceptance_criterion(unsigned i, const SuiteConfig& cfg);
/// Runtime budget of criterion i in seconds.
double criterion_budget_seconds(unsigned i);

/// Evaluates tasks on up to `jobs` threads; results keep task order.
std::vector<ReportDoc> run_parallel(const std::vector<std::function<ReportDoc()>>& tasks, unsigned jobs);

}  // namespace commvar
