// One line per acceptance criterion; exit status 1 if any fails.
#include "cuspidal/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>

int main() {
  using clock = std::chrono::steady_clock;
  std::map<int, std::vector<cuspidal::Check>> by_criterion;
  std::map<int, double> seconds;
  for (const auto& suite : cuspidal::suite_names()) {
    const auto start = clock::now();
    const auto checks = cuspidal::run_suite(suite);
    const double dt = std::chrono::duration<double>(clock::now() - start).count();
    for (const auto& c : checks) {
      by_criterion[c.criterion].push_back(c);
      seconds[c.criterion] += dt / static_cast<double>(checks.size());
    }
  }
  bool all = true;
  for (int k = 1; k <= 10; ++k) {
    const auto& checks = by_criterion[k];
    int failed = 0;
    for (const auto& c : checks) {
      if (c.passed) continue;
      ++failed;
      std::printf("    criterion %d failed: %s (measured %.6g, tolerance %.6g)\n", k, c.name.c_str(), c.measured,
                  c.tolerance);
    }
    const bool ok = !checks.empty() && failed == 0;
    all = all && ok;
    std::printf("criterion %2d %-16s %s  %zu checks, %d failed, %.2fs\n", k,
                checks.empty() ? "?" : checks.front().suite.c_str(), ok ? "PASS" : "FAIL", checks.size(), failed,
                seconds[k]);
  }
  return all ? 0 : 1;
}
