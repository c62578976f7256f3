#pragma once

#include <cstdint>
#include <vector>

namespace cfm {

// Number of pairs (m, q), m, q >= 1, with
//   m < sqrt(d),  |q - sqrt(d)| < m,  q | (d - m^2).
// Comparisons against sqrt(d) are integer-exact:
//   m < sqrt(d)        <=>  m^2 < d
//   |q - sqrt(d)| < m  <=>  d < (q+m)^2  and  (q <= m  or  (q-m)^2 < d).
// Enumerates divisors of d - m^2 by trial division per m.
uint64_t g_of_d(uint64_t d);

// g(d) over the half-open segment (lo, hi].
struct GTable {
  uint64_t lo = 0;
  uint64_t hi = 0;
  std::vector<uint32_t> counts;  // counts[d - lo - 1] = g(d)

  uint32_t at(uint64_t d) const { return counts[d - lo - 1]; }
};

// Sieve of g over (lo, hi] via the equivalent parametrization
//   d = m^2 + k q,  k >= 1,  |k - q| < 2m,
// one increment per admissible triple (m, q, k).  Requires lo < hi <= x.
GTable g_sieve(uint64_t x, uint64_t lo, uint64_t hi);

namespace detail {
// Accumulates the triple enumeration into a zero-initialized buffer of
// size hi - lo; counts[d - lo - 1] receives g(d).
void sieve_segment(uint64_t lo, uint64_t hi, uint32_t* counts);
}

}  // namespace cfm
