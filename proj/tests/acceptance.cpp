// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>

#include "rauzy/verify.hpp"

int main() {
  const rauzy::VerifyOptions opts;
  int failed = 0;
  for (int id = 1; id <= rauzy::kCriterionCount; ++id) {
    const rauzy::ClaimReport r = rauzy::run_criterion(id, opts);
    if (!r.passed()) ++failed;
    std::printf("%s %2d %-22s %7.2fs  %s\n", r.passed() ? "PASS" : "FAIL", r.id, r.topic.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", rauzy::kCriterionCount - failed, rauzy::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
