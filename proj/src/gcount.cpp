#include "cfm/gcount.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cfm/cf.hpp"

namespace cfm {

using u128 = unsigned __int128;

uint64_t g_of_d(uint64_t d) {
  if (d == 0) throw std::invalid_argument("g_of_d: d must be positive");
  uint64_t count = 0;
  const uint64_t mmax = (d > 1) ? isqrt_u64(d - 1) : 0;
  for (uint64_t m = 1; m <= mmax; ++m) {
    const uint64_t n = d - m * m;
    for (uint64_t q = 1; q * q <= n; ++q) {
      if (n % q) continue;
      const uint64_t qs[2] = {q, n / q};
      const int reps = (qs[0] == qs[1]) ? 1 : 2;
      for (int i = 0; i < reps; ++i) {
        const uint64_t qq = qs[i];
        if (u128(qq + m) * (qq + m) <= d) continue;           // need d < (q+m)^2
        if (qq > m && u128(qq - m) * (qq - m) >= d) continue;  // need (q-m)^2 < d
        ++count;
      }
    }
  }
  return count;
}

namespace detail {

namespace {

uint64_t isqrt_u128(u128 n) {
  if (n == 0) return 0;
  uint64_t r = isqrt_u64(static_cast<uint64_t>(n >> 64) ? ~uint64_t(0)
                                                        : static_cast<uint64_t>(n));
  if (n >> 64) {
    // crude start from the top half; a few fixup steps land exactly
    r = isqrt_u64(static_cast<uint64_t>(n >> 64));
    r = (r + 1) << 32;
  }
  while (u128(r) * r > n) r = static_cast<uint64_t>((u128(r) + n / r) / 2);
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// dmin(m, q) = m^2 + max(1, q - 2m + 1) q is the smallest d generated by
// (m, q); dmax(m, q) = m^2 + (q + 2m - 1) q the largest.  Both increase
// with q, so the q range hitting (lo, hi] is a contiguous interval.

// Smallest q >= 1 with dmax(m, q) > lo.
uint64_t first_q(uint64_t m, uint64_t lo) {
  const uint64_t mm = m * m;
  if (mm >= lo) return 1;
  const u128 L = lo - mm;  // want q^2 + (2m - 1) q > L
  const uint64_t b = 2 * m - 1;
  uint64_t q = (isqrt_u128(u128(b) * b + 4 * L) - b) / 2;
  if (q == 0) q = 1;
  while (u128(q) * q + u128(b) * q <= L) ++q;
  while (q > 1 && u128(q - 1) * (q - 1) + u128(b) * (q - 1) > L) --q;
  return q;
}

// Largest q with dmin(m, q) <= hi, or 0 when none.
uint64_t last_q(uint64_t m, uint64_t hi) {
  const uint64_t mm = m * m;
  assert(mm < hi);
  const uint64_t cap_small = std::min<uint64_t>(2 * m, hi - mm);  // dmin = mm + q
  const uint64_t b = 2 * m - 1;
  // q > 2m branch: q^2 - b q + mm <= hi
  const u128 H = hi - mm;
  uint64_t q = (isqrt_u128(u128(b) * b + 4 * H) + b) / 2;
  while (u128(q) * q > u128(b) * q + H) --q;
  while (u128(q + 1) * (q + 1) <= u128(b) * (q + 1) + H) ++q;
  const uint64_t cap_large = (q > 2 * m) ? q : 0;
  return std::max(cap_small, cap_large);
}

}  // namespace

void sieve_segment(uint64_t lo, uint64_t hi, uint32_t* counts) {
  assert(lo < hi);
  const uint64_t mmax = isqrt_u64(hi - 1);
  for (uint64_t m = 1; m <= mmax; ++m) {
    const uint64_t mm = m * m;
    const uint64_t q1 = first_q(m, lo);
    const uint64_t q2 = last_q(m, hi);
    for (uint64_t q = q1; q <= q2; ++q) {
      uint64_t klo = (q > 2 * m) ? q - 2 * m + 1 : 1;
      if (lo > mm) klo = std::max(klo, (lo - mm) / q + 1);
      const uint64_t khi = std::min(q + 2 * m - 1, (hi - mm) / q);
      if (klo > khi) continue;
      uint64_t idx = mm + klo * q - lo - 1;
      for (uint64_t k = klo; k <= khi; ++k, idx += q) {
        ++counts[idx];
        assert(counts[idx] != 0);  // uint32 must not wrap
      }
    }
  }
}

}  // namespace detail

GTable g_sieve(uint64_t x, uint64_t lo, uint64_t hi) {
  if (!(lo < hi) || hi > x)
    throw std::invalid_argument("g_sieve: need lo < hi <= x");
  GTable t;
  t.lo = lo;
  t.hi = hi;
  t.counts.assign(hi - lo, 0);
  detail::sieve_segment(lo, hi, t.counts.data());
  return t;
}

}  // namespace cfm
