#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <map>
#include <utility>

#include "cfm/cf.hpp"
#include "cfm/gcount.hpp"

using cfm::cf_period;
using cfm::cf_steps;
using cfm::isqrt_u64;

namespace {

// Independent period oracle: walk the states (P, Q) from step 1 and report
// the distance between the first repeated state.  Knows nothing about the
// Q = 1 termination rule used by cf_period.
uint64_t period_by_state_repeat(uint64_t d) {
  const uint64_t a0 = isqrt_u64(d);
  if (a0 * a0 == d) return 0;
  std::map<std::pair<uint64_t, uint64_t>, uint64_t> seen;
  uint64_t P = a0, Q = d - a0 * a0;
  for (uint64_t k = 1;; ++k) {
    const auto [it, fresh] = seen.try_emplace({P, Q}, k);
    if (!fresh) return k - it->second;
    const uint64_t a = (a0 + P) / Q;
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
}

}  // namespace

TEST_CASE("isqrt exact on spec points") {
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(16) == 4);
  CHECK(isqrt_u64(999999999999999999ULL) == 999999999ULL);  // 10^18 - 1
}

TEST_CASE("isqrt satisfies r^2 <= n < (r+1)^2 everywhere sampled") {
  for (uint64_t n : {1ULL, 2ULL, 3ULL, 24ULL, 25ULL, 26ULL, (1ULL << 52) - 1, 1ULL << 52,
                     0xFFFFFFFFFFFFFFFFULL, 0xFFFFFFFE00000000ULL}) {
    const uint64_t r = isqrt_u64(n);
    CHECK((unsigned __int128)r * r <= n);
    CHECK((unsigned __int128)(r + 1) * (r + 1) > n);
  }
  uint64_t n = 1;
  for (int i = 0; i < 4000; ++i) {
    n = n * 2862933555777941757ULL + 3037000493ULL;  // LCG walk over 64-bit inputs
    const uint64_t r = isqrt_u64(n);
    CHECK((unsigned __int128)r * r <= n);
    CHECK((unsigned __int128)(r + 1) * (r + 1) > n);
  }
}

TEST_CASE("cf_period on known expansions") {
  CHECK(cf_period(4).T == 0);  // perfect square
  CHECK(cf_period(1).T == 0);
  CHECK(cf_period(2).T == 1);
  CHECK(cf_period(13).T == 5);
  CHECK(cf_period(7).T == 4);
  CHECK(cf_period(13).a0 == 3);
  CHECK_THROWS_AS(cf_period(0), std::invalid_argument);
}

TEST_CASE("period agrees with the state-repeat oracle") {
  for (uint64_t d = 2; d <= 2000; ++d) {
    const uint64_t a0 = isqrt_u64(d);
    if (a0 * a0 == d) continue;
    CHECK(cf_period(d).T == period_by_state_repeat(d));
  }
}

TEST_CASE("surd states honor their bounds and divisibility") {
  for (uint64_t d = 2; d <= 2000; ++d) {
    const uint64_t a0 = isqrt_u64(d);
    if (a0 * a0 == d) continue;
    const uint64_t T = cf_period(d).T;
    const auto steps = cf_steps(d, T + 1);
    REQUIRE(steps.size() == T + 1);
    for (const cfm::SurdStep& s : steps) {
      CHECK(s.P >= 1);
      CHECK(s.P <= a0);
      CHECK(s.Q >= 1);
      CHECK(s.Q <= 2 * a0 + 1);
      CHECK((d - s.P * s.P) % s.Q == 0);
    }
    // pure periodicity from step 1: step T+1 reproduces step 1
    CHECK(steps[T].P == steps[0].P);
    CHECK(steps[T].Q == steps[0].Q);
  }
}

TEST_CASE("recurrence closes its cycle for every non-square d <= 1e5") {
  bool all_ok = true;
  for (uint64_t d = 2; d <= 100000; ++d) {
    const uint64_t a0 = isqrt_u64(d);
    if (a0 * a0 == d) continue;
    const uint64_t T = cf_period(d).T;
    // re-run T more steps from (P_1, Q_1) and land back on it
    uint64_t P = a0, Q = d - a0 * a0;
    const uint64_t P1 = P, Q1 = Q;
    for (uint64_t k = 0; k < T; ++k) {
      const uint64_t a = (a0 + P) / Q;
      P = a * Q - P;
      Q = (d - P * P) / Q;
    }
    all_ok = all_ok && P == P1 && Q == Q1;
  }
  CHECK(all_ok);
}

TEST_CASE("T(d) <= g(d) on a 2e4 prefix") {
  const cfm::GTable g = cfm::g_sieve(20000, 1, 20000);
  for (uint64_t d = 2; d <= 20000; ++d) {
    const uint64_t T = cf_period(d).T;
    CHECK(T <= g.at(d));
  }
}
