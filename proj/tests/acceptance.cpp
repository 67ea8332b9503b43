// End-to-end acceptance gate: runs every verification suite once, prints one
// PASS/FAIL line per check with its wall time, enforces the per-check time
// budgets, and exits nonzero when anything fails.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "polyshell/verify.hpp"

int main() {
  const std::map<std::string, double> time_budget = {
      {"table-top", 1.0},
      {"cube-boundary-sd", 10.0},
      {"cuboids", 120.0},
      {"line-shelling", 30.0},
  };
  std::vector<polyshell::SuiteResult> results = polyshell::run_all_verification_suites();
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const polyshell::SuiteResult& r = results[i];
    bool ok = r.pass;
    std::string over;
    auto it = time_budget.find(r.id);
    if (it != time_budget.end() && r.seconds >= it->second) {
      ok = false;
      char buf[64];
      std::snprintf(buf, sizeof(buf), " [over the %.0fs time budget]", it->second);
      over = buf;
    }
    if (!ok) ++failed;
    std::printf("%2zu  %-20s %s %7.2fs%s\n", i + 1, r.id.c_str(), ok ? "PASS" : "FAIL",
                r.seconds, over.c_str());
    if (!r.notes.empty()) std::printf("      %s\n", r.notes.c_str());
  }
  std::printf("acceptance: %zu/%zu checks passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
