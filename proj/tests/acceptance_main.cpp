// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion.
#include <cstdio>

#include "plancol/verify.hpp"

int main() {
  using plancol::CriterionResult;
  const int total = plancol::criterion_count();
  int failures = 0;
  for (int id = 1; id <= total; ++id) {
    CriterionResult res = plancol::run_criterion(id);
    std::printf("[%2d/%d] %s  %-24s  %7.2fs / %gs  (%s)\n", id, total,
                res.pass ? "PASS" : "FAIL", res.name.c_str(), res.seconds, res.limit_seconds,
                res.detail.c_str());
    std::fflush(stdout);
    if (!res.pass) ++failures;
  }
  std::printf("ACCEPTANCE: %d/%d passed\n", total - failures, total);
  return failures;
}
