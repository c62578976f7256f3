#include "cfm/cf.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace cfm {

using u128 = unsigned __int128;

uint64_t isqrt_u64(uint64_t n) noexcept {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  // fix up the floating estimate; (r+1)^2 can exceed 2^64, hence 128-bit
  while (u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

PeriodResult cf_period(uint64_t d) {
  if (d == 0) throw std::invalid_argument("cf_period: d must be positive");
  const uint64_t a0 = isqrt_u64(d);
  if (a0 * a0 == d) return {d, 0, a0};

  // States (P, Q) satisfy 1 <= P <= a0, 1 <= Q <= 2*a0 + 1 and the sequence
  // is purely periodic from k = 1, so Q = 1 must occur within the size of
  // the state space.  Overrunning that cap means broken arithmetic.
  const u128 cap = u128(a0) * (2 * a0 + 1) + 2;
  uint64_t P = a0;
  uint64_t Q = d - a0 * a0;
  uint64_t T = 1;
  while (Q != 1) {
    const uint64_t a = (a0 + P) / Q;
    const uint64_t Pn = a * Q - P;
    const uint64_t Pn2 = static_cast<uint64_t>(u128(Pn) * Pn);
    assert(Pn2 <= d && (d - Pn2) % Q == 0);
    const uint64_t Qn = (d - Pn2) / Q;
    P = Pn;
    Q = Qn;
    if (u128(++T) > cap)
      throw std::runtime_error("cf_period: surd recurrence failed to close");
  }
  return {d, T, a0};
}

std::vector<SurdStep> cf_steps(uint64_t d, std::size_t count) {
  if (d == 0) throw std::invalid_argument("cf_steps: d must be positive");
  const uint64_t a0 = isqrt_u64(d);
  std::vector<SurdStep> out;
  if (a0 * a0 == d) return out;
  out.reserve(count);
  uint64_t P = a0;
  uint64_t Q = d - a0 * a0;
  for (std::size_t k = 0; k < count; ++k) {
    const uint64_t a = (a0 + P) / Q;
    out.push_back({P, Q, a});
    const uint64_t Pn = a * Q - P;
    const uint64_t Pn2 = static_cast<uint64_t>(u128(Pn) * Pn);
    Q = (d - Pn2) / Q;
    P = Pn;
  }
  return out;
}

}  // namespace cfm
