// End-to-end acceptance run: executes the whole verification battery and
// prints one line per top-level criterion.  Exit status 0 only if all pass.
#include <algorithm>
#include <cstdio>

#include "bellsim/verification.hpp"

int main() {
  auto checks = bellsim::run_all_checks();
  auto summary = bellsim::acceptance_summary(checks);

  bool all = true;
  for (const auto& c : summary) {
    std::printf("CRITERION %d %s (%zu checks) ... %s\n", c.index, c.title.c_str(), c.checks,
                c.passed ? "PASS" : "FAIL");
    if (!c.passed) all = false;
  }
  for (const auto& c : checks)
    if (!c.passed) std::printf("  failing: [%s] %s\n", c.group.c_str(), bellsim::check_line(c).c_str());
  std::printf("%zu/%zu checks passed overall\n",
              static_cast<size_t>(std::count_if(checks.begin(), checks.end(),
                                                [](const auto& c) { return c.passed; })),
              checks.size());
  std::printf("ACCEPTANCE: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
