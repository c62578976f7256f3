#include "cfm/wsum.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cfm/arith.hpp"
#include "cfm/cf.hpp"

namespace cfm {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t kFieldCap = (uint64_t(1) << 31) - 1;
constexpr uint64_t kXCap = uint64_t(1) << 62;

void check_domain(uint64_t x, const Quadruple& t) {
  if (t.m1 == 0 || t.m2 == 0 || t.q1 == 0 || t.q2 == 0 ||
      t.m1 > kFieldCap || t.m2 > kFieldCap || t.q1 > kFieldCap || t.q2 > kFieldCap)
    throw std::invalid_argument("quadruple fields must lie in [1, 2^31 - 1]");
  if (x >= kXCap) throw std::invalid_argument("x must be below 2^62");
}

inline int64_t sq(int64_t v) { return v * v; }

WindowBounds window_bounds_unchecked(uint64_t x, const Quadruple& t) {
  const int64_t m1 = static_cast<int64_t>(t.m1), m2 = static_cast<int64_t>(t.m2);
  const int64_t q1 = static_cast<int64_t>(t.q1), q2 = static_cast<int64_t>(t.q2);
  const int64_t m1s = sq(m1);
  const int64_t fmax = std::max({m1s, sq(m2), sq(q1 - m1), sq(q2 - m2)});
  // (q + m)^2 can pass 2^63 at the field cap, so compare in 128 bits
  const u128 g2 = u128(t.q1 + t.m1) * (t.q1 + t.m1);
  const u128 g3 = u128(t.q2 + t.m2) * (t.q2 + t.m2);
  const u128 gmin = std::min({u128(x), g2, g3});
  return {fmax - m1s, static_cast<int64_t>(gmin) - m1s, t.q1};
}

inline uint64_t count_direct_wb(const WindowBounds& wb, const Quadruple& t) {
  if (wb.Fnum >= wb.Gnum) return 0;
  const int64_t q1 = static_cast<int64_t>(t.q1);
  const int64_t q2 = static_cast<int64_t>(t.q2);
  const int64_t diff = sq(static_cast<int64_t>(t.m2)) - sq(static_cast<int64_t>(t.m1));
  const int64_t kmin = floor_div(wb.Fnum, q1) + 1;  // Fnum >= 0, so kmin >= 1
  const int64_t kmax = floor_div(wb.Gnum, q1);
  if (kmax < kmin) return 0;
  const int64_t step = q1 % q2;
  int64_t dm = diff % q2;
  if (dm < 0) dm += q2;
  int64_t r = ((kmin % q2) * step - dm) % q2;
  if (r < 0) r += q2;
  uint64_t count = 0;
  for (int64_t k = kmin; k <= kmax; ++k) {
    count += (r == 0);
    r += step;
    if (r >= q2) r -= q2;
  }
  return count;
}

inline uint64_t count_modular_wb(const WindowBounds& wb, const GcdSplit& s) {
  if (wb.Fnum >= wb.Gnum) return 0;
  if (!s.nu_defined) return 0;
  const int64_t k2 = static_cast<int64_t>(s.kappa2);
  const int64_t kbar =
      (k2 == 1) ? 0 : static_cast<int64_t>(mod_inverse(static_cast<int64_t>(s.kappa1), s.kappa2));
  int64_t kap = ((s.nu % k2) * (kbar % k2)) % k2;
  if (kap < 0) kap += k2;
  const int64_t q1 = static_cast<int64_t>(wb.q1);
  const int64_t den = q1 * k2;
  const int64_t hi = floor_div(wb.Gnum - kap * q1, den);
  const int64_t lo = floor_div(wb.Fnum - kap * q1, den);
  assert(hi >= lo);
  return static_cast<uint64_t>(hi - lo);
}

}  // namespace

WindowBounds window_bounds(uint64_t x, const Quadruple& t) {
  check_domain(x, t);
  return window_bounds_unchecked(x, t);
}

GcdSplit gcd_split(const Quadruple& t) {
  GcdSplit s{};
  s.Delta = std::gcd(t.q1, t.q2);
  s.kappa1 = t.q1 / s.Delta;
  s.kappa2 = t.q2 / s.Delta;
  const int64_t diff =
      sq(static_cast<int64_t>(t.m2)) - sq(static_cast<int64_t>(t.m1));
  s.nu_defined = diff % static_cast<int64_t>(s.Delta) == 0;
  s.nu = s.nu_defined ? diff / static_cast<int64_t>(s.Delta) : 0;
  return s;
}

bool in_A(uint64_t x, const Quadruple& t) {
  check_domain(x, t);
  if (t.q1 > t.q2) return false;
  // m_i <= sqrt(x) and q_i <= sqrt(x) + m_i, all in integer form
  if (u128(t.m1) * t.m1 > x || u128(t.m2) * t.m2 > x) return false;
  if (t.q1 > t.m1 && u128(t.q1 - t.m1) * (t.q1 - t.m1) > x) return false;
  if (t.q2 > t.m2 && u128(t.q2 - t.m2) * (t.q2 - t.m2) > x) return false;
  const WindowBounds wb = window_bounds_unchecked(x, t);
  return wb.Fnum < wb.Gnum;
}

uint64_t count_k_direct(uint64_t x, const Quadruple& t) {
  check_domain(x, t);
  return count_direct_wb(window_bounds_unchecked(x, t), t);
}

uint64_t count_k_modular(uint64_t x, const Quadruple& t) {
  check_domain(x, t);
  return count_modular_wb(window_bounds_unchecked(x, t), gcd_split(t));
}

uint64_t w_bruteforce(uint64_t x) {
  if (x == 0) throw std::invalid_argument("w_bruteforce: x must be positive");
  if (x > kWBruteforceCap)
    throw std::invalid_argument("w_bruteforce: x exceeds the oracle cap");
  std::vector<uint32_t> len(x + 1, 0);
  const uint64_t mmax = (x > 1) ? isqrt_u64(x - 1) : 0;
  for (uint64_t m = 1; m <= mmax; ++m) {
    const uint64_t mm = m * m;
    for (uint64_t q = 1;; ++q) {
      const uint64_t klo = (q > 2 * m) ? q - 2 * m + 1 : 1;
      if (mm + klo * q > x) break;
      const uint64_t khi = std::min(q + 2 * m - 1, (x - mm) / q);
      for (uint64_t k = klo; k <= khi; ++k) ++len[mm + k * q];
    }
  }
  uint64_t W = 0;
  for (const uint32_t c : len) W += static_cast<uint64_t>(c) * c;
  return W;
}

WIdentities w_identities(uint64_t x) {
  if (x == 0) throw std::invalid_argument("w_identities: x must be positive");
  if (x > kWBruteforceCap)
    throw std::invalid_argument("w_identities: x exceeds the oracle cap");

  WIdentities out{};
  out.W = w_bruteforce(x);

  // q multiset per d over all admissible triples; pair counts by q-order.
  std::vector<std::vector<uint32_t>> qs(x + 1);
  const uint64_t mmax = (x > 1) ? isqrt_u64(x - 1) : 0;
  for (uint64_t m = 1; m <= mmax; ++m) {
    const uint64_t mm = m * m;
    for (uint64_t q = 1;; ++q) {
      const uint64_t klo = (q > 2 * m) ? q - 2 * m + 1 : 1;
      if (mm + klo * q > x) break;
      const uint64_t khi = std::min(q + 2 * m - 1, (x - mm) / q);
      for (uint64_t k = klo; k <= khi; ++k)
        qs[mm + k * q].push_back(static_cast<uint32_t>(q));
    }
  }
  for (auto& list : qs) {
    if (list.empty()) continue;
    std::sort(list.begin(), list.end());
    // runs of equal q, scanned from the largest q down
    std::size_t end = list.size();
    uint64_t larger = 0;
    while (end > 0) {
      std::size_t begin = end;
      while (begin > 0 && list[begin - 1] == list[end - 1]) --begin;
      const uint64_t c = end - begin;
      out.W_diag += c * c;
      out.W_le += c * (c + larger);
      larger += c;
      end = begin;
    }
  }

  // W2: both counting routes over the quadruples of A(x) with q1 <= q2.
  // The loop bounds m_i <= isq and q_i <= isq + m_i are exactly the range
  // constraints of A(x); the tighter caps on m2 and q2 only skip quadruples
  // whose window is empty, so the set summed over is unchanged.
  const uint64_t isq = isqrt_u64(x);
  for (uint64_t m1 = 1; m1 <= isq; ++m1) {
    for (uint64_t q1 = 1; q1 <= isq + m1; ++q1) {
      const uint64_t m2max = std::min(isq, q1 + m1 - 1);  // m2^2 < (q1+m1)^2
      for (uint64_t m2 = 1; m2 <= m2max; ++m2) {
        // (q2 - m2)^2 < (q1 + m1)^2 bounds q2 above
        const uint64_t q2max = std::min(isq + m2, q1 + m1 + m2 - 1);
        for (uint64_t q2 = q1; q2 <= q2max; ++q2) {
          const Quadruple t{m1, m2, q1, q2};
          const WindowBounds wb = window_bounds_unchecked(x, t);
          if (wb.Fnum >= wb.Gnum) continue;
          out.W2_direct += count_direct_wb(wb, t);
          out.W2_modular += count_modular_wb(wb, gcd_split(t));
        }
      }
    }
  }
  return out;
}

}  // namespace cfm
