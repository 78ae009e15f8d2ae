#pragma once

#include <string>
#include <vector>

namespace plancol {

// One verification criterion: a named check with a pinned wall-clock budget.
// Criteria cover the winding propositions, the extension machinery, the
// tight-face geometry, the exact solver, and the colorability scans.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

// Runs criterion 1..11; throws Errc::invalid_argument for other ids.
CriterionResult run_criterion(int id);

int criterion_count();

// Named verification suites exposed on the command line; each maps to one
// criterion: wC4, wsum0, preexten, exten, distcrit, cylinder, aksionov.
CriterionResult run_named_suite(const std::string& name);
std::vector<std::string> named_suites();

}  // namespace plancol
