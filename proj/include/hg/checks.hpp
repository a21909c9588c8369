#ifndef HG_CHECKS_HPP
#define HG_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;  // statistics on success, minimal reproducer on failure
};

// Registered property suites, in canonical run order.
std::vector<std::string> check_suites();
bool has_check(const std::string& name);

// Runs one named suite; Error(Usage) for unknown names.
CheckResult run_check(const std::string& name, uint64_t seed = 7);

// The full battery, in order.
std::vector<CheckResult> run_all_checks(uint64_t seed = 7);

}  // namespace hg

#endif
