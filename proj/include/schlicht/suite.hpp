#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schlicht/report.hpp"

namespace schlicht {

// Checker families run by the suite.
const std::vector<std::string>& suite_families();

struct SuiteConfig {
  std::uint64_t seed = 42;
  int n_cases = 200;
  std::vector<std::string> which;  // empty: every family
  double tol = 0.0;                // > 0 replaces the per-checker tolerance
  int jobs = 1;
};

struct SuiteResult {
  std::vector<InequalityReport> reports;
  int skipped = 0;
  SuiteSummary summary;
};

SuiteResult run_suite(const SuiteConfig& cfg);

}  // namespace schlicht
