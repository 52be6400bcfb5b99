#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffgamma {

struct CriterionResult {
  int id = 0;
  std::string title;
  /// Tolerances met and runtime within budget.
  bool pass = false;
  double seconds = 0;
  double budget = 0;
  std::string detail;
};

/// Number of acceptance criteria.
constexpr int kCriteria = 11;

/// Runs criterion `id` (1-based) with randomized parts seeded by `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);
/// All criteria, or those listed in `only`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {});

}  // namespace ffgamma
