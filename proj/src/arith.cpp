#include "cfm/arith.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace cfm {

int64_t floor_div(int64_t a, int64_t b) noexcept {
  assert(b > 0);
  const int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

std::vector<Factor> factorize(uint64_t n) {
  std::vector<Factor> out;
  if (n < 2) return out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

uint64_t divisor_count(uint64_t n) {
  uint64_t t = 1;
  for (const Factor& f : factorize(n)) t *= f.e + 1;
  return t;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t phi = n;
  for (const Factor& f : factorize(n)) phi -= phi / f.p;
  return phi;
}

int moebius(uint64_t n) {
  int mu = 1;
  for (const Factor& f : factorize(n)) {
    if (f.e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

uint64_t mod_inverse(int64_t a, uint64_t n) {
  if (n == 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (n == 1) return 0;
  const int64_t m = static_cast<int64_t>(n);
  int64_t r0 = m, r1 = ((a % m) + m) % m;
  int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw NotCoprimeError("mod_inverse: arguments are not coprime");
  return static_cast<uint64_t>(((t0 % m) + m) % m);
}

int gauss_eps(uint64_t delta) noexcept {
  if (delta % 2 == 1) return 1;
  return (delta % 4 == 0) ? 2 : 0;
}

RhoValue rho_bruteforce(uint64_t Delta) {
  if (Delta == 0) throw std::invalid_argument("rho_bruteforce: Delta must be positive");
  if (Delta > 1'000'000) throw std::invalid_argument("rho_bruteforce: Delta exceeds O(Delta) cap");
  std::vector<uint32_t> hist(Delta, 0);
  for (uint64_t x = 1; x <= Delta; ++x) ++hist[(x * x) % Delta];
  uint64_t rho = 0;
  for (const uint32_t h : hist) rho += static_cast<uint64_t>(h) * h;
  return {Delta, rho};
}

uint64_t rho_from_factors(const std::vector<Factor>& factors) {
  uint64_t Delta = 1;
  for (const Factor& f : factors)
    for (uint32_t i = 0; i < f.e; ++i) Delta *= f.p;

  // Divisors with phi carried along: extending by p^k multiplies phi by
  // p^k - p^(k-1) (or 1 for k = 0).
  std::vector<std::pair<uint64_t, uint64_t>> divs{{1, 1}};  // (delta, phi(delta))
  for (const Factor& f : factors) {
    const std::size_t base = divs.size();
    uint64_t pk = 1;
    for (uint32_t k = 1; k <= f.e; ++k) {
      const uint64_t prev = pk;
      pk *= f.p;
      for (std::size_t i = 0; i < base; ++i)
        divs.emplace_back(divs[i].first * pk, divs[i].second * (pk - prev));
    }
  }

  uint64_t sum = 0;
  for (const auto& [delta, phi] : divs)
    sum += static_cast<uint64_t>(gauss_eps(delta)) * phi * (Delta / delta);
  return sum;
}

RhoValue rho_closed(uint64_t Delta) {
  if (Delta == 0) throw std::invalid_argument("rho_closed: Delta must be positive");
  return {Delta, rho_from_factors(factorize(Delta))};
}

SpfSieve::SpfSieve(uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1) {
  for (uint32_t i = 0; i <= limit; ++i) spf_[i] = i;
  for (uint64_t i = 2; i * i <= limit; ++i)
    if (spf_[i] == i)
      for (uint64_t j = i * i; j <= limit; j += i)
        if (spf_[j] == j) spf_[j] = static_cast<uint32_t>(i);
}

std::vector<Factor> SpfSieve::factorize(uint32_t n) const {
  std::vector<Factor> out;
  while (n > 1) {
    const uint32_t p = spf_[n];
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

double rho_series_partial(uint32_t N) {
  if (N == 0) throw std::invalid_argument("rho_series_partial: N must be positive");
  const SpfSieve spf(N);
  double sum = 0.0;
  for (uint32_t Delta = 1; Delta <= N; ++Delta) {
    const double d = static_cast<double>(Delta);
    sum += static_cast<double>(rho_from_factors(spf.factorize(Delta))) / (d * d * d);
  }
  return sum;
}

std::complex<double> gauss_sum(uint64_t q, int64_t a) {
  if (q == 0) throw std::invalid_argument("gauss_sum: q must be positive");
  const int64_t m = static_cast<int64_t>(q);
  const uint64_t am = static_cast<uint64_t>(((a % m) + m) % m);
  double re = 0.0, im = 0.0;
  for (uint64_t x = 1; x <= q; ++x) {
    const uint64_t r = (am * ((x * x) % q)) % q;  // a x^2 mod q, exact
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {re, im};
}

double sawtooth(double u) noexcept { return 0.5 - (u - std::floor(u)); }

double sawtooth_fourier(double u, uint32_t H) {
  if (H == 0) throw std::invalid_argument("sawtooth_fourier: H must be positive");
  double sum = 0.0;
  const double w = 2.0 * std::numbers::pi * u;
  for (uint32_t h = 1; h <= H; ++h)
    sum += std::sin(w * static_cast<double>(h)) / (std::numbers::pi * static_cast<double>(h));
  return sum;
}

}  // namespace cfm
