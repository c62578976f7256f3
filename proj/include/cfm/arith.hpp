#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cfm {

struct NotCoprimeError : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
// zeta(3), 30 digits; the one high-precision literal in the project.
inline constexpr double kZeta3 = 1.20205690315959428539973816151;

// Floor division toward -infinity; b > 0, a may be negative.
int64_t floor_div(int64_t a, int64_t b) noexcept;

struct Factor {
  uint64_t p;
  uint32_t e;
};

// Trial-division factorization, primes in increasing order.
std::vector<Factor> factorize(uint64_t n);

uint64_t divisor_count(uint64_t n);           // tau(n)
uint64_t euler_phi(uint64_t n);
int moebius(uint64_t n);

// b in [0, n) with a*b == 1 (mod n); n = 1 yields 0.
// Throws NotCoprimeError when gcd(a, n) > 1.
uint64_t mod_inverse(int64_t a, uint64_t n);

// The 1/2/0 factor by residue of delta mod 4: 1 for odd delta, 2 when
// 4 | delta, 0 when delta == 2 (mod 4).  |S(delta, e)|^2 = eps(delta)*delta
// for (e, delta) = 1.
int gauss_eps(uint64_t delta) noexcept;

struct RhoValue {
  uint64_t Delta;
  uint64_t rho;  // #{(x, y) in [1, Delta]^2 : x^2 == y^2 (mod Delta)}
};

// Counts solutions via residue multiplicities N(c) = #{x : x^2 == c},
// rho = sum_c N(c)^2.  O(Delta) time and memory, Delta <= 10^6.
RhoValue rho_bruteforce(uint64_t Delta);

// Closed form rho(Delta) = sum over divisors delta | Delta of
// eps(delta) * phi(delta) * (Delta/delta), evaluated exactly in integers.
RhoValue rho_closed(uint64_t Delta);
uint64_t rho_from_factors(const std::vector<Factor>& factors);

// Smallest-prime-factor sieve for bulk factorization.
class SpfSieve {
 public:
  explicit SpfSieve(uint32_t limit);
  std::vector<Factor> factorize(uint32_t n) const;
  uint32_t limit() const { return static_cast<uint32_t>(spf_.size()) - 1; }

 private:
  std::vector<uint32_t> spf_;
};

// sum_{Delta <= N} rho(Delta) / Delta^3; converges to
// (13/14) zeta(2)^2 / zeta(3) = 2.0901972874...
double rho_series_partial(uint32_t N);

// Quadratic Gauss sum S(q, a) = sum_{x=1}^{q} e(a x^2 / q), e(t) = exp(2 pi i t).
std::complex<double> gauss_sum(uint64_t q, int64_t a);

// sawtooth(u) = 1/2 - {u}; sawtooth_fourier is its order-H Fourier partial
// sum  sum_{h=1}^{H} sin(2 pi h u) / (pi h).
double sawtooth(double u) noexcept;
double sawtooth_fourier(double u, uint32_t H);

}  // namespace cfm
