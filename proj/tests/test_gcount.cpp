#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <numeric>

#include "cfm/cf.hpp"
#include "cfm/gcount.hpp"
#include "cfm/moments.hpp"

using cfm::g_of_d;
using cfm::g_sieve;
using cfm::GTable;

namespace {

// Exhaustive pair oracle: walk every q in the window range and test
// divisibility, instead of enumerating divisors.  O(d) per value.
uint64_t g_pair_oracle(uint64_t d) {
  uint64_t count = 0;
  for (uint64_t m = 1; m * m < d; ++m) {
    for (uint64_t q = 1; (q - 1) * (q - 1) <= 4 * d; ++q) {
      if ((q + m) * (q + m) <= d) continue;
      if (q > m && (q - m) * (q - m) >= d) continue;
      if ((d - m * m) % q == 0) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("g_of_d matches hand-enumerated values") {
  CHECK(g_of_d(2) == 1);   // only (1,1)
  CHECK(g_of_d(3) == 2);   // (1,1), (1,2)
  CHECK(g_of_d(9) == 0);
  CHECK(g_of_d(16) == 2);  // (2,3), (2,4): nonzero although T(16) = 0
  CHECK(g_of_d(1) == 0);
  CHECK_THROWS_AS(g_of_d(0), std::invalid_argument);
}

TEST_CASE("g_of_d equals the exhaustive pair oracle") {
  for (uint64_t d = 1; d <= 3000; ++d) CHECK(g_of_d(d) == g_pair_oracle(d));
}

TEST_CASE("sieve reproduces the oracle on (1, 10]") {
  const GTable t = g_sieve(10, 1, 10);
  const uint32_t expect[9] = {1, 2, 0, 2, 2, 4, 3, 0, 4};
  for (uint64_t d = 2; d <= 10; ++d) CHECK(t.at(d) == expect[d - 2]);
}

TEST_CASE("sieve equals g_of_d up to 2e4") {
  const uint64_t x = 20000;
  const GTable t = g_sieve(x, 0, x);
  for (uint64_t d = 1; d <= x; ++d) CHECK(t.at(d) == g_of_d(d));
}

TEST_CASE("segment concatenation equals the single segment") {
  const uint64_t x = 10000;
  const GTable whole = g_sieve(x, 0, x);
  const GTable a = g_sieve(x, 0, x / 2);
  const GTable b = g_sieve(x, x / 2, x);
  for (uint64_t d = 1; d <= x / 2; ++d) CHECK(whole.at(d) == a.at(d));
  for (uint64_t d = x / 2 + 1; d <= x; ++d) CHECK(whole.at(d) == b.at(d));
}

TEST_CASE("empty or inverted segments are rejected") {
  CHECK_THROWS_AS(g_sieve(10, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(g_sieve(10, 7, 5), std::invalid_argument);
  CHECK_THROWS_AS(g_sieve(10, 5, 12), std::invalid_argument);
}

TEST_CASE("segment sums tie out against the moment report") {
  const GTable t = g_sieve(100, 0, 100);
  const uint64_t sum = std::accumulate(t.counts.begin(), t.counts.end(), uint64_t(0));
  CHECK(sum == cfm::compute_moments(100).S1_g);
}
