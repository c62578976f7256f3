#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>

#include "cfm/arith.hpp"

using cfm::divisor_count;
using cfm::gauss_sum;
using cfm::mod_inverse;
using cfm::rho_bruteforce;
using cfm::rho_closed;
using cfm::rho_from_factors;
using cfm::rho_series_partial;
using cfm::sawtooth;
using cfm::sawtooth_fourier;
using cfm::SpfSieve;

namespace {

// Third oracle: the O(Delta^2) pair loop.
uint64_t rho_pairloop(uint64_t Delta) {
  uint64_t count = 0;
  for (uint64_t x = 1; x <= Delta; ++x)
    for (uint64_t y = 1; y <= Delta; ++y)
      if ((x * x) % Delta == (y * y) % Delta) ++count;
  return count;
}

uint64_t rng_next(uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

}  // namespace

TEST_CASE("mod_inverse basics") {
  CHECK(mod_inverse(3, 7) == 5);
  for (const uint64_t n : {uint64_t(2), uint64_t(5), uint64_t(97)}) CHECK(mod_inverse(1, n) == 1);
  CHECK(mod_inverse(5, 1) == 0);
  CHECK(mod_inverse(-3, 7) == 2);  // (-3)*2 = -6 == 1 (mod 7)
  CHECK_THROWS_AS(mod_inverse(2, 4), cfm::NotCoprimeError);
  for (uint64_t n = 2; n <= 200; ++n)
    for (int64_t a = 1; a < (int64_t)n; ++a) {
      if (std::gcd((uint64_t)a, n) != 1) continue;
      CHECK((a * (int64_t)mod_inverse(a, n)) % (int64_t)n == 1);
    }
}

TEST_CASE("factorization helpers") {
  const auto f = cfm::factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0].p == 2);
  CHECK(f[0].e == 3);
  CHECK(f[2].p == 5);
  CHECK(divisor_count(360) == 24);
  CHECK(cfm::euler_phi(360) == 96);
  CHECK(cfm::moebius(30) == -1);
  CHECK(cfm::moebius(12) == 0);
  CHECK(cfm::moebius(1) == 1);
  const SpfSieve spf(1000);
  for (uint32_t n = 2; n <= 1000; ++n) {
    uint64_t prod = 1;
    for (const cfm::Factor& p : spf.factorize(n))
      for (uint32_t i = 0; i < p.e; ++i) prod *= p.p;
    CHECK(prod == n);
  }
}

TEST_CASE("rho on pinned values") {
  CHECK(rho_bruteforce(1).rho == 1);
  CHECK(rho_bruteforce(5).rho == 9);   // 2p - 1
  CHECK(rho_bruteforce(4).rho == 8);   // alpha 2^alpha with alpha = 2
  CHECK(rho_closed(2).rho == 2);
  CHECK(rho_closed(12).rho == 40);     // rho(4) rho(3) = 8 * 5
  for (uint32_t a = 1, pow2 = 2; a <= 10; ++a, pow2 *= 2)
    CHECK(rho_closed(pow2).rho == uint64_t(a) * pow2);
  for (const uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 101ULL})
    CHECK(rho_closed(p).rho == 2 * p - 1);
  CHECK_THROWS_AS(rho_bruteforce(0), std::invalid_argument);
  CHECK_THROWS_AS(rho_bruteforce(2'000'000), std::invalid_argument);
}

TEST_CASE("rho: closed form vs brute force vs pair loop") {
  for (uint64_t d = 1; d <= 500; ++d)
    CHECK(rho_closed(d).rho == rho_bruteforce(d).rho);
  for (uint64_t d = 1; d <= 300; ++d)
    CHECK(rho_closed(d).rho == rho_pairloop(d));
}

TEST_CASE("rho is multiplicative on random coprime pairs") {
  uint64_t s = 31337;
  int done = 0, bad = 0;
  while (done < 2000) {
    const uint64_t a = 1 + rng_next(s) % 3000, b = 1 + rng_next(s) % 3000;
    if (std::gcd(a, b) != 1) continue;
    ++done;
    if (rho_closed(a * b).rho != rho_closed(a).rho * rho_closed(b).rho) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("rho obeys the 2 Delta tau ceiling") {
  const SpfSieve spf(20000);
  for (uint64_t d = 1; d <= 20000; ++d) {
    const auto f = spf.factorize((uint32_t)d);
    uint64_t tau = 1;
    for (const cfm::Factor& p : f) tau *= p.e + 1;
    CHECK(rho_from_factors(f) <= 2 * d * tau);
    CHECK(rho_from_factors(f) >= d);  // diagonal solutions x = y
  }
}

TEST_CASE("rho local factors match the Euler product") {
  // partial sums sum_{a<=6} rho(p^a)/p^{3a} against (1 - 1/p^3)/(1 - 1/p^2)^2,
  // tolerance = geometric tail bound sum_{a>6} (1+a)/p^{2a}
  for (const double p : {3.0, 5.0, 7.0, 11.0, 13.0}) {
    double s = 1.0;
    uint64_t pa = 1;
    for (uint32_t a = 1; a <= 6; ++a) {
      pa *= (uint64_t)p;
      s += (double)rho_closed(pa).rho / std::pow(p, 3.0 * a);
    }
    const double factor = (1.0 - 1.0 / (p * p * p)) / std::pow(1.0 - 1.0 / (p * p), 2.0);
    const double tail = 16.0 * std::pow(p, -14.0);
    CHECK(std::abs(s - factor) <= tail + 1e-12);
  }
}

TEST_CASE("rho series partial sums") {
  CHECK(rho_series_partial(1) == 1.0);
  CHECK(rho_series_partial(2) == doctest::Approx(1.25).epsilon(1e-15));  // 1 + 2/8
  const double partial = rho_series_partial(20000);
  const double limit = (13.0 / 14.0) * cfm::kZeta2 * cfm::kZeta2 / cfm::kZeta3;
  CHECK(std::abs(limit - partial) <= (4.0 * std::log(20000.0) + 12.0) / 20000.0);
}

TEST_CASE("Gauss sums on pinned moduli") {
  CHECK(std::norm(gauss_sum(5, 1)) == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(std::abs(gauss_sum(2, 1)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::norm(gauss_sum(4, 1)) == doctest::Approx(8.0).epsilon(1e-9));
  // |S(delta, e)|^2 = eps(delta) delta for coprime e
  for (uint64_t delta = 1; delta <= 50; ++delta)
    for (uint64_t e = 1; e <= delta; ++e) {
      if (std::gcd(e, delta) != 1) continue;
      CHECK(std::norm(gauss_sum(delta, (int64_t)e)) ==
            doctest::Approx((double)cfm::gauss_eps(delta) * (double)delta).epsilon(1e-8));
    }
}

TEST_CASE("rho through the Gauss-sum average") {
  for (uint64_t d = 1; d <= 60; ++d) {
    double sum = 0.0;
    for (uint64_t c = 1; c <= d; ++c) sum += std::norm(gauss_sum(d, (int64_t)c));
    const double route = sum / (double)d;
    CHECK(route == doctest::Approx((double)rho_closed(d).rho).epsilon(1e-6));
  }
}

TEST_CASE("sawtooth and the floor-difference identity") {
  CHECK(sawtooth(0.25) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(sawtooth(-0.25) == doctest::Approx(-0.25).epsilon(1e-15));
  uint64_t s = 555;
  double worst = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const double v = (double)(rng_next(s) >> 11) * 0x1.0p-53 * 2000.0 - 1000.0;
    const double w = (double)(rng_next(s) >> 11) * 0x1.0p-53 * 2000.0 - 1000.0;
    const double lhs = std::floor(w) - std::floor(v);
    const double rhs = w - v + sawtooth(w) - sawtooth(v);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Fourier partial sum approaches the sawtooth") {
  CHECK(std::abs(sawtooth_fourier(0.3, 10000) - sawtooth(0.3)) < 1e-3);
  // at points away from the jump the tail shrinks like 1/(H ||u||)
  uint64_t s = 777;
  for (int i = 0; i < 50; ++i) {
    const double u = 0.1 + 0.8 * (double)(rng_next(s) >> 11) * 0x1.0p-53;
    CHECK(std::abs(sawtooth_fourier(u, 4096) - sawtooth(u)) < 1e-2);
  }
  CHECK_THROWS_AS(sawtooth_fourier(0.3, 0), std::invalid_argument);
}
