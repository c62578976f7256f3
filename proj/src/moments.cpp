#include "cfm/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cfm/cf.hpp"
#include "cfm/gcount.hpp"

namespace cfm {

double eq1_theta(uint64_t x, uint64_t S1_g) noexcept {
  // Double precision suffices: the x^{3/2} main term carries an absolute
  // rounding error of order x^{3/2} * 2^-52 (< 1e-2 at x = 1e9), negligible
  // against the bracket width x + 4 sqrt(x).
  const double xd = static_cast<double>(x);
  const double sx = std::sqrt(xd);
  const double main = (4.0 / 3.0) * std::numbers::ln2 * xd * sx;
  return (static_cast<double>(S1_g) - main + 2.0 * xd + 2.0 * sx) / (xd + 4.0 * sx);
}

double eq2_rhs(uint64_t x) noexcept {
  const double xd = static_cast<double>(x);
  const double lg = std::log(4.0) + 4.0 + std::log(xd);  // ln(4 e^4 x)
  return 11.9 * xd * xd + 5.0 * xd * std::sqrt(xd) * lg * lg;
}

bool check_bound_2(const MomentReport& r) noexcept {
  const double rhs = eq2_rhs(r.x);
  return static_cast<double>(r.S2_g) <= rhs && static_cast<double>(r.S2_T) <= rhs;
}

namespace {

void t_sums(uint64_t lo, uint64_t hi, uint64_t& S1, uint64_t& S2) {
  uint64_t s1 = 0, s2 = 0;
#pragma omp parallel for schedule(dynamic, 2048) reduction(+ : s1, s2)
  for (int64_t d = static_cast<int64_t>(lo) + 1; d <= static_cast<int64_t>(hi); ++d) {
    const uint64_t T = cf_period(static_cast<uint64_t>(d)).T;
    s1 += T;
    s2 += T * T;
  }
  S1 = s1;
  S2 = s2;
}

}  // namespace

MomentReport compute_moments(uint64_t x, uint64_t segment_size) {
  if (x < 2) throw std::invalid_argument("compute_moments: x must be >= 2");
  if (segment_size == 0) throw std::invalid_argument("compute_moments: segment_size must be positive");

  MomentReport r;
  r.x = x;

  const uint64_t nseg = (x + segment_size - 1) / segment_size;
  uint64_t S1g = 0, S2g = 0;
#pragma omp parallel
  {
    std::vector<uint32_t> buf;
#pragma omp for schedule(dynamic) reduction(+ : S1g, S2g)
    for (int64_t s = 0; s < static_cast<int64_t>(nseg); ++s) {
      const uint64_t lo = static_cast<uint64_t>(s) * segment_size;
      const uint64_t hi = std::min(x, lo + segment_size);
      buf.assign(hi - lo, 0);
      detail::sieve_segment(lo, hi, buf.data());
      for (const uint32_t c : buf) {
        S1g += c;
        S2g += static_cast<uint64_t>(c) * c;
      }
    }
  }
  r.S1_g = S1g;
  r.S2_g = S2g;

  t_sums(0, x, r.S1_T, r.S2_T);
  r.theta = eq1_theta(x, r.S1_g);
  return r;
}

DCount count_D(uint64_t x, double alpha) {
  if (x < 2) throw std::invalid_argument("count_D: x must be >= 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("count_D: alpha must be positive");
  const double bar = alpha * alpha * static_cast<double>(x);
  uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 2048) reduction(+ : count)
  for (int64_t d = static_cast<int64_t>(x) + 1; d <= static_cast<int64_t>(2 * x); ++d) {
    const uint64_t T = cf_period(static_cast<uint64_t>(d)).T;
    if (static_cast<double>(T) * static_cast<double>(T) > bar) ++count;
  }
  return {x, alpha, count};
}

bool chebyshev_check(uint64_t x, double alpha) {
  const DCount dc = count_D(x, alpha);
  uint64_t S1 = 0, S2 = 0;
  t_sums(x, 2 * x, S1, S2);
  const long double lhs = static_cast<long double>(dc.count) * alpha * alpha * static_cast<long double>(x);
  return lhs <= static_cast<long double>(S2);
}

}  // namespace cfm
