#pragma once

#include <cstdint>

namespace cfm {

// Aggregates over d <= x.  theta is the bracketed remainder of
//   sum_{d<=x} g(d) = (4/3)(ln 2) x^{3/2} - 2x - 2 sqrt(x) + theta (x + 4 sqrt(x)),
// which lies in [0, 1] for every x > 1.
struct MomentReport {
  uint64_t x = 0;
  uint64_t S1_g = 0;  // sum g(d)
  uint64_t S2_g = 0;  // sum g(d)^2
  uint64_t S1_T = 0;  // sum T(d)
  uint64_t S2_T = 0;  // sum T(d)^2
  double theta = 0.0;
};

struct DCount {
  uint64_t x = 0;
  double alpha = 0.0;
  uint64_t count = 0;  // #{d in (x, 2x] : T(d) > alpha sqrt(x)}
};

inline constexpr uint64_t kDefaultSegment = 1 << 18;

// Sums g, g^2 (segmented sieve) and T, T^2 (surd recurrence) over d <= x.
// Parallel over segments / d ranges; integer merges keep the result
// independent of thread count.  Requires x >= 2.
MomentReport compute_moments(uint64_t x, uint64_t segment_size = kDefaultSegment);

// theta of the first-moment identity, evaluated in double precision.
double eq1_theta(uint64_t x, uint64_t S1_g) noexcept;

// Right side of the second-moment bound: 11.9 x^2 + 5 x^{3/2} ln^2(4 e^4 x).
double eq2_rhs(uint64_t x) noexcept;

// True iff both S2_g and S2_T satisfy the second-moment bound.
bool check_bound_2(const MomentReport& report) noexcept;

// Membership test T(d) > alpha sqrt(x) is evaluated as T^2 > alpha^2 x, which
// is exact for positive values and feeds the Markov inequality directly.
DCount count_D(uint64_t x, double alpha);

// count_D(x, alpha) * alpha^2 * x <= sum_{x < d <= 2x} T(d)^2; every counted
// d contributes more than alpha^2 x to the right side, so this must hold.
bool chebyshev_check(uint64_t x, double alpha);

}  // namespace cfm
