#pragma once

// The end-to-end checks that gate a release. Shared by the acceptance test
// binary and `bgrank selftest`.

#include <functional>
#include <string>
#include <vector>

#include "bgrank/qseries.hpp"

namespace bgrank::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double ms = 0.0;
};

struct SuiteOptions {
  /// Shrinks every sweep so the whole suite runs in a few seconds.
  bool quick = false;
  /// Gaussian binomial used by the identity checks; tests swap in a broken
  /// one to make sure the suite notices.
  GaussianFn gaussian = gaussian_binomial;
};

CriterionResult golden_examples(const SuiteOptions& opts);
CriterionResult eq1_exact(const SuiteOptions& opts);
CriterionResult eq52_exact(const SuiteOptions& opts);
CriterionResult truncated_identities(const SuiteOptions& opts);
CriterionResult theorem_cardinality(const SuiteOptions& opts);
CriterionResult bijection_properties(const SuiteOptions& opts);
CriterionResult oracle_equivalences(const SuiteOptions& opts);
CriterionResult descending_case_coverage(const SuiteOptions& opts);

std::vector<CriterionResult> run_all(
    const SuiteOptions& opts, const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 2 eq1-exact (123 ms): detail"
std::string format_line(const CriterionResult& r);

}  // namespace bgrank::acceptance
