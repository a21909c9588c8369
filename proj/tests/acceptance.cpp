#include <chrono>
#include <cstdio>

#include "hg/checks.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  auto suites = hg::check_suites();
  int failed = 0;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    auto t0 = clock::now();
    hg::CheckResult r = hg::run_check(suites[i], 7);
    double dt = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("[%2zu/%zu] %-22s %s  (%.1fs)%s%s%s\n", i + 1, suites.size(), r.name.c_str(),
                r.passed ? "PASS" : "FAIL", dt, r.details.empty() ? "" : "  [",
                r.details.c_str(), r.details.empty() ? "" : "]");
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  if (failed) std::printf("%d suite(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
