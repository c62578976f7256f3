// Acceptance battery: runs every cross-check at full scale and prints one
// pass/fail line per criterion.  Exit status is the number of failures.

#include <cstdio>

#include "cfm/checks.hpp"

int main() {
  cfm::checks::CheckOptions opts;
  opts.full = true;
  std::printf("acceptance battery (full bounds)\n");
  const auto results = cfm::checks::run_checks(opts);
  const int failures = cfm::checks::print_results(results);
  return failures;
}
