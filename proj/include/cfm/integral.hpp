#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cfm {

struct McEstimate {
  double mean = 0.0;
  double std_err = 0.0;  // sample standard deviation / sqrt(samples)
  uint64_t samples = 0;
  uint64_t seed = 0;
};

// f = f_r attains the maximum and g = g_s the minimum, 1-based, ties broken
// toward the lowest index.
struct RegionLabel {
  int r;  // 1..4 over {u1^2, u2^2, (u1-v1)^2, (u2-v2)^2}
  int s;  // 1..3 over {1, (u1+v1)^2, (u2+v2)^2}
};

// phi(u1,u2,v1,v2) =
//   max(0, min(1,(u1+v1)^2,(u2+v2)^2) - max(u1^2,u2^2,(u1-v1)^2,(u2-v2)^2))
//   / (v1 v2),   requires v1, v2 > 0.
double integrand_phi(double u1, double u2, double v1, double v2);

// Requires the point to lie in omega: 0 <= u_i <= 1, 0 < v_i <= 1 + u_i.
RegionLabel classify_region(double u1, double u2, double v1, double v2);

// Monte Carlo estimate of
//   S(eps) = int_0^1 du1 int_0^1 du2 int_eps^{1+u1} dv1 int_eps^{1+u2} phi dv2.
// Sampling: u_i uniform on [0,1), v_i uniform on (eps, 2], indicator
// v_i <= 1 + u_i, weight (2-eps)^2.  Draw i is a pure function of
// (seed, i) and partial sums reduce over a fixed block grid, so the result
// is bit-identical for any worker count.  S(0) = 2 ln^2 2.
McEstimate integrate_S(double eps, uint64_t samples, uint64_t seed);

struct EpsRow {
  double eps;
  double estimate;
  double std_err;
  double deviation;  // |estimate - 2 ln^2 2|
  double ratio;      // deviation / (eps ln^2(1/eps))
};

// One integrate_S row per eps (all must lie in (0, 0.5]); the same seed is
// reused so rows share sample points.
std::vector<EpsRow> s_eps_convergence(std::span<const double> eps_list,
                                      uint64_t samples, uint64_t seed);

struct Constants {
  double S_exact;          // 2 ln^2 2 = 0.9609060278...
  double c0;               // 13 zeta(2) / (14 zeta(3)) * S_exact = 1.2210113...
  double c1;               // 3 c0 = 3.6630340...
  double S_numeric_quote;  // 0.959: numeric estimate that predates the closed form
  double c0_quote;         // 1.218: constant computed from that estimate
  double c1_quote;         // 3.654
};

Constants constants() noexcept;

namespace detail {
// SplitMix64 over a Weyl stream of the counter; draw `ctr` depends only on
// (seed, ctr).
double counter_u01(uint64_t seed, uint64_t ctr) noexcept;
}

}  // namespace cfm
