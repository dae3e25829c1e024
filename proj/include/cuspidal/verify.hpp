#pragma once

#include "cuspidal/radon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cuspidal {

/// One measured quantity against its pinned tolerance.
struct Check {
  int criterion = 0;
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
};

/// Suite names in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for an unknown name.
std::vector<Check> run_suite(const std::string& name, const VerifyOptions& options = {});

// Individual suites; the criterion number is recorded in every Check.
std::vector<Check> suite_classification();                          // 1
std::vector<Check> suite_vanishing();                               // 2
std::vector<Check> suite_spherical();                               // 3
std::vector<Check> suite_exceptional_odd();                         // 4
std::vector<Check> suite_exceptional_even();                        // 5
std::vector<Check> suite_compact_support();                         // 6
std::vector<Check> suite_ode();                                     // 7
std::vector<Check> suite_divergence();                              // 8
std::vector<Check> suite_oracles(const VerifyOptions& options);     // 9
std::vector<Check> suite_decay();                                   // 10

}  // namespace cuspidal
