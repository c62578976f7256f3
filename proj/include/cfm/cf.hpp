#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cfm {

// floor(sqrt(n)), exact for all 64-bit n.
uint64_t isqrt_u64(uint64_t n) noexcept;

// One state of the surd recurrence for sqrt(d).  At step k >= 1 the tail of
// the expansion is (P_k + sqrt(d)) / Q_k with partial quotient a_k, and
//   P_1 = a0,  Q_1 = d - a0^2,  a_k = floor((a0 + P_k) / Q_k),
//   P_{k+1} = a_k Q_k - P_k,    Q_{k+1} = (d - P_{k+1}^2) / Q_k.
// Q_k divides d - P_k^2 at every step.
struct SurdStep {
  uint64_t P = 0;
  uint64_t Q = 1;
  uint64_t a = 0;
};

struct PeriodResult {
  uint64_t d = 0;
  uint64_t T = 0;   // minimal period length; 0 iff d is a perfect square
  uint64_t a0 = 0;  // floor(sqrt(d))
};

// Minimal period of the continued fraction of sqrt(d).  The recurrence
// terminates at the first step index k >= 1 with Q_k = 1.
PeriodResult cf_period(uint64_t d);

// First `count` steps (P_k, Q_k, a_k), k = 1..count.  Empty for perfect
// squares (the expansion has no periodic tail).
std::vector<SurdStep> cf_steps(uint64_t d, std::size_t count);

}  // namespace cfm
