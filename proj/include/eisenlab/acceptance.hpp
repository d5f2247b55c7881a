#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eisenlab {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool checks_passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool passed() const { return checks_passed && seconds < limit_seconds; }
};

/// Criteria 1..10 of the acceptance suite. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int number);

/// "PASS  3 pair bijections  (0.41 s, limit 5 s)  detail"
std::string format_result(const CriterionResult& r);

/// Runs every criterion, streaming one line each to `out` when given.
std::vector<CriterionResult> run_acceptance(std::ostream* out = nullptr);

}  // namespace eisenlab
