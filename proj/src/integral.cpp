#include "cfm/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cfm/arith.hpp"

namespace cfm {

namespace detail {

double counter_u01(uint64_t seed, uint64_t ctr) noexcept {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (ctr + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace detail

namespace {

inline double phi_core(double u1, double u2, double v1, double v2) {
  const double g = std::min({1.0, (u1 + v1) * (u1 + v1), (u2 + v2) * (u2 + v2)});
  const double f = std::max({u1 * u1, u2 * u2, (u1 - v1) * (u1 - v1), (u2 - v2) * (u2 - v2)});
  return std::max(0.0, g - f) / (v1 * v2);
}

constexpr uint64_t kBlock = uint64_t(1) << 16;

}  // namespace

double integrand_phi(double u1, double u2, double v1, double v2) {
  if (!(v1 > 0.0) || !(v2 > 0.0))
    throw std::domain_error("integrand_phi: v1, v2 must be positive");
  return phi_core(u1, u2, v1, v2);
}

RegionLabel classify_region(double u1, double u2, double v1, double v2) {
  if (!(u1 >= 0.0 && u1 <= 1.0 && u2 >= 0.0 && u2 <= 1.0) ||
      !(v1 > 0.0 && v1 <= 1.0 + u1) || !(v2 > 0.0 && v2 <= 1.0 + u2))
    throw std::domain_error("classify_region: point outside omega");
  const double fs[4] = {u1 * u1, u2 * u2, (u1 - v1) * (u1 - v1), (u2 - v2) * (u2 - v2)};
  const double gs[3] = {1.0, (u1 + v1) * (u1 + v1), (u2 + v2) * (u2 + v2)};
  int r = 0, s = 0;
  for (int i = 1; i < 4; ++i)
    if (fs[i] > fs[r]) r = i;
  for (int i = 1; i < 3; ++i)
    if (gs[i] < gs[s]) s = i;
  return {r + 1, s + 1};
}

McEstimate integrate_S(double eps, uint64_t samples, uint64_t seed) {
  if (!(eps >= 0.0) || eps >= 1.0)
    throw std::invalid_argument("integrate_S: eps must lie in [0, 1)");
  if (samples == 0) throw std::invalid_argument("integrate_S: samples must be positive");

  const double span = 2.0 - eps;
  const double vol = span * span;
  const uint64_t nblocks = (samples + kBlock - 1) / kBlock;
  std::vector<double> bsum(nblocks), bsum2(nblocks);

#pragma omp parallel for schedule(dynamic)
  for (int64_t b = 0; b < static_cast<int64_t>(nblocks); ++b) {
    const uint64_t i0 = static_cast<uint64_t>(b) * kBlock;
    const uint64_t i1 = std::min(samples, i0 + kBlock);
    double s = 0.0, s2 = 0.0;
    for (uint64_t i = i0; i < i1; ++i) {
      const double u1 = detail::counter_u01(seed, 4 * i);
      const double u2 = detail::counter_u01(seed, 4 * i + 1);
      const double v1 = eps + span * (1.0 - detail::counter_u01(seed, 4 * i + 2));
      const double v2 = eps + span * (1.0 - detail::counter_u01(seed, 4 * i + 3));
      double w = 0.0;
      if (v1 <= 1.0 + u1 && v2 <= 1.0 + u2) w = phi_core(u1, u2, v1, v2);
      s += w;
      s2 += w * w;
    }
    bsum[b] = s;
    bsum2[b] = s2;
  }

  double S = 0.0, S2 = 0.0;
  for (uint64_t b = 0; b < nblocks; ++b) {  // fixed order, thread-count independent
    S += bsum[b];
    S2 += bsum2[b];
  }
  const double n = static_cast<double>(samples);
  McEstimate est;
  est.mean = vol * (S / n);
  if (samples > 1) {
    const double var = vol * vol * std::max(0.0, S2 - S * S / n) / (n - 1.0);
    est.std_err = std::sqrt(var / n);
  }
  est.samples = samples;
  est.seed = seed;
  return est;
}

std::vector<EpsRow> s_eps_convergence(std::span<const double> eps_list,
                                      uint64_t samples, uint64_t seed) {
  const double S_exact = constants().S_exact;
  std::vector<EpsRow> rows;
  rows.reserve(eps_list.size());
  for (const double eps : eps_list) {
    if (!(eps > 0.0) || eps > 0.5)
      throw std::invalid_argument("s_eps_convergence: eps must lie in (0, 0.5]");
    const McEstimate mc = integrate_S(eps, samples, seed);
    const double dev = std::abs(mc.mean - S_exact);
    const double l = std::log(1.0 / eps);
    rows.push_back({eps, mc.mean, mc.std_err, dev, dev / (eps * l * l)});
  }
  return rows;
}

Constants constants() noexcept {
  const double S = 2.0 * std::numbers::ln2 * std::numbers::ln2;
  const double c0 = (13.0 / 14.0) * (kZeta2 / kZeta3) * S;
  return {S, c0, 3.0 * c0, 0.959, 1.218, 3.654};
}

}  // namespace cfm
