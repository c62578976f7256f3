#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfm::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// quick: reduced bounds meant to finish within a minute.
// full: the bounds the verification battery is specified at.
struct CheckOptions {
  bool full = true;
  uint64_t seed = 12345;
};

// Empirical cap for |S(eps) - S| / (eps ln^2(1/eps)); measured ratios stay
// below 1, the cap tests boundedness only.
inline constexpr double kEpsRatioCap = 20.0;

// Fixed reference values, all reproducible from the definitions above them.
inline constexpr double kSExactRef = 0.9609060278364028;   // 2 ln^2 2
inline constexpr double kC0Ref = 1.2210113543681556;       // 13 zeta(2)/(14 zeta(3)) * 2 ln^2 2
inline constexpr double kRhoSeriesRef = 2.090198;          // (13/14) zeta(2)^2 / zeta(3)

std::vector<CheckResult> run_checks(const CheckOptions& opts);

// Pretty pass/fail table; returns the number of failures.
int print_results(const std::vector<CheckResult>& results);

}  // namespace cfm::checks
