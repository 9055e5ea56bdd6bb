// The library-level acceptance criteria, runnable from the acceptance
// binary and from `colombeau selftest`.
#pragma once

#include <string>
#include <vector>

namespace colombeau::testkit {

struct CriterionResult {
  int id;
  std::string name;
  std::string tolerance;
  bool passed;
  std::string detail;
};

inline constexpr int kLibraryCriteria = 11;

/// Criterion 1..kLibraryCriteria. Never throws; exceptions count as failure.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_library_criteria();

/// "PASS [3] name (tolerance): detail".
std::string format(const CriterionResult& r);

}  // namespace colombeau::testkit
