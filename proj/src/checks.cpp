#include "cfm/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cfm/arith.hpp"
#include "cfm/cf.hpp"
#include "cfm/gcount.hpp"
#include "cfm/integral.hpp"
#include "cfm/moments.hpp"
#include "cfm/wsum.hpp"

namespace cfm::checks {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---- 1, 2, 10: moment reports -------------------------------------------

std::vector<MomentReport> moment_reports(const std::vector<uint64_t>& xs) {
  std::vector<MomentReport> out;
  out.reserve(xs.size());
  for (const uint64_t x : xs) out.push_back(compute_moments(x));
  return out;
}

CheckResult check_theta_bracket(const std::vector<MomentReport>& reports, double secs) {
  CheckResult r{"theta bracket: 0 <= theta <= 1 at all x", true, "", secs};
  std::ostringstream os;
  for (const MomentReport& m : reports) {
    const bool ok = m.theta >= 0.0 && m.theta <= 1.0;
    r.pass = r.pass && ok;
    os << fmt("x=%llu theta=%.6f%s ", (unsigned long long)m.x, m.theta, ok ? "" : " OUT");
  }
  r.detail = os.str();
  return r;
}

CheckResult check_second_moment_bound(const std::vector<MomentReport>& reports) {
  const auto t0 = Clock::now();
  CheckResult r{"second-moment bound: S2_g, S2_T <= 11.9x^2 + 5x^{3/2} ln^2(4e^4 x)", true, ""};
  std::ostringstream os;
  for (const MomentReport& m : reports) {
    const bool ok = check_bound_2(m);
    r.pass = r.pass && ok;
    os << fmt("x=%llu S2_g=%llu rhs=%.4g%s ", (unsigned long long)m.x,
              (unsigned long long)m.S2_g, eq2_rhs(m.x), ok ? "" : " VIOLATED");
  }
  r.detail = os.str();
  r.seconds = elapsed_s(t0);
  return r;
}

CheckResult check_trajectory(const std::vector<MomentReport>& reports) {
  const auto t0 = Clock::now();
  CheckResult r{"S2_g/x^2 trajectory: reported, asserted only against the rigorous ceiling", true, ""};
  std::ostringstream os;
  os << fmt("c0=%.7f (not asserted; error term too weak at these x) | ", constants().c0);
  for (const MomentReport& m : reports) {
    if (m.x < 10000) continue;
    const double xd = static_cast<double>(m.x);
    const double ratio = static_cast<double>(m.S2_g) / (xd * xd);
    const double ceil = eq2_rhs(m.x) / (xd * xd);
    const bool ok = ratio <= ceil;
    r.pass = r.pass && ok;
    os << fmt("x=%llu S2g/x^2=%.6f ceiling=%.3f%s ", (unsigned long long)m.x, ratio,
              ceil, ok ? "" : " VIOLATED");
  }
  r.detail = os.str();
  r.seconds = elapsed_s(t0);
  return r;
}

// ---- 3: W identities ------------------------------------------------------

CheckResult check_w_identities(uint64_t xmax) {
  const auto t0 = Clock::now();
  CheckResult r{"W routes: W = sum g^2, W = 2 W_le - W_diag, W2 direct = modular, x <= " +
                    std::to_string(xmax),
                true, ""};

  // prefix sums of g(d)^2 through the divisor-window oracle
  std::vector<uint64_t> g2(xmax + 1, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t d = 1; d <= static_cast<int64_t>(xmax); ++d) {
    const uint64_t g = g_of_d(static_cast<uint64_t>(d));
    g2[d] = g * g;
  }
  for (uint64_t d = 1; d <= xmax; ++d) g2[d] += g2[d - 1];

  uint64_t bad_x = 0;
  bool spot_ok = true;
#pragma omp parallel for schedule(dynamic)
  for (int64_t x = 1; x <= static_cast<int64_t>(xmax); ++x) {
    const WIdentities id = w_identities(static_cast<uint64_t>(x));
    const bool ok = id.W == g2[x] && id.W == 2 * id.W_le - id.W_diag &&
                    id.W2_direct == id.W2_modular;
    if (!ok) {
#pragma omp critical
      bad_x = static_cast<uint64_t>(x);
    }
    if (x == 10 && id.W != 54) spot_ok = false;
  }
  r.pass = bad_x == 0 && spot_ok;
  r.detail = bad_x ? fmt("first failing x=%llu", (unsigned long long)bad_x)
                   : fmt("all identities exact; spot W(10)=54 %s", spot_ok ? "ok" : "FAILED");
  r.seconds = elapsed_s(t0);
  return r;
}

// ---- 4, 5: rho ------------------------------------------------------------

CheckResult check_rho_oracles(uint64_t brute_max, uint64_t pairs, uint64_t bound_max,
                              uint64_t gauss_max, uint64_t seed) {
  const auto t0 = Clock::now();
  CheckResult r{"rho: closed = brute force, multiplicative, <= 2 Delta tau, Gauss-sum route", true, ""};
  std::ostringstream os;

  uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t d = 1; d <= static_cast<int64_t>(brute_max); ++d)
    if (rho_closed(static_cast<uint64_t>(d)).rho != rho_bruteforce(static_cast<uint64_t>(d)).rho)
#pragma omp critical
      bad = static_cast<uint64_t>(d);
  if (bad) {
    r.pass = false;
    os << fmt("closed != brute at Delta=%llu; ", (unsigned long long)bad);
  }

  uint64_t accepted = 0, ctr = 0, mul_bad = 0;
  while (accepted < pairs) {
    const uint64_t a = 1 + static_cast<uint64_t>(detail::counter_u01(seed, ctr++) * 9999.0);
    const uint64_t b = 1 + static_cast<uint64_t>(detail::counter_u01(seed, ctr++) * 9999.0);
    if (std::gcd(a, b) != 1) continue;
    ++accepted;
    if (rho_closed(a * b).rho != rho_closed(a).rho * rho_closed(b).rho) mul_bad = a;
  }
  if (mul_bad) {
    r.pass = false;
    os << fmt("multiplicativity failed near a=%llu; ", (unsigned long long)mul_bad);
  }

  const SpfSieve spf(static_cast<uint32_t>(bound_max));
  uint64_t bound_bad = 0;
  for (uint64_t d = 1; d <= bound_max; ++d) {
    const auto f = spf.factorize(static_cast<uint32_t>(d));
    uint64_t tau = 1;
    for (const Factor& p : f) tau *= p.e + 1;
    if (rho_from_factors(f) > 2 * d * tau) bound_bad = d;
  }
  if (bound_bad) {
    r.pass = false;
    os << fmt("rho > 2 Delta tau at Delta=%llu; ", (unsigned long long)bound_bad);
  }

  double worst_rel = 0.0;
  for (uint64_t d = 1; d <= gauss_max; ++d) {
    double sum = 0.0;
    for (uint64_t c = 1; c <= d; ++c) sum += std::norm(gauss_sum(d, static_cast<int64_t>(c)));
    const double route = sum / static_cast<double>(d);
    const double exact = static_cast<double>(rho_closed(d).rho);
    worst_rel = std::max(worst_rel, std::abs(route - exact) / exact);
  }
  if (worst_rel > 1e-6) r.pass = false;
  os << fmt("%llu coprime pairs exact, Gauss route worst rel err %.2e (cap 1e-6)",
            (unsigned long long)pairs, worst_rel);
  r.detail = os.str();
  r.seconds = elapsed_s(t0);
  return r;
}

CheckResult check_rho_series(uint32_t N) {
  const auto t0 = Clock::now();
  CheckResult r{"rho series: |sum_{Delta<=1e5} rho/Delta^3 - 2.090198| < 1e-3 with analytic tail", true, ""};
  const double partial = rho_series_partial(N);
  const double limit = (13.0 / 14.0) * kZeta2 * kZeta2 / kZeta3;
  const double residual = std::abs(limit - partial);
  // tail bound via rho <= 2 Delta tau: sum_{Delta>N} 2 tau/Delta^2 <= (4 ln N + 12)/N
  const double tail_bound = (4.0 * std::log(static_cast<double>(N)) + 12.0) / N;
  const bool near = std::abs(partial - kRhoSeriesRef) < 1e-3;
  const bool tail_ok = residual <= tail_bound;
  r.pass = near && tail_ok;
  r.detail = fmt("partial=%.7f ref=%.6f residual=%.2e tail bound=%.2e%s%s", partial,
                 kRhoSeriesRef, residual, tail_bound, near ? "" : " REF MISS",
                 tail_ok ? "" : " TAIL MISS");
  r.seconds = elapsed_s(t0);
  return r;
}

// ---- 6, 7: integral and constants ----------------------------------------

CheckResult check_mc_integral(uint64_t samples, uint64_t seed) {
  const auto t0 = Clock::now();
  CheckResult r{"Monte Carlo S: |mean - 0.9609060278| <= 3 stderr and stderr <= 7e-4", true, ""};
  const McEstimate mc = integrate_S(0.0, samples, seed);
  const double secs = elapsed_s(t0);
  const double dev = std::abs(mc.mean - kSExactRef);
  // the stderr cap is stated at 1e7 samples; scale as 1/sqrt(n) off that point
  const double cap = 7e-4 * std::sqrt(1e7 / static_cast<double>(samples));
  const bool consistent = dev <= 3.0 * mc.std_err;
  const bool tight = mc.std_err <= cap;
  const bool fast = secs <= 30.0;
  r.pass = consistent && tight && fast;
  r.detail = fmt("mean=%.7f stderr=%.2e dev=%.2e (3se=%.2e)%s; stderr cap %.1e%s; %.1fs%s",
                 mc.mean, mc.std_err, dev, 3.0 * mc.std_err, consistent ? "" : " INCONSISTENT",
                 cap, tight ? "" : " EXCEEDED", secs, fast ? "" : " SLOW");
  r.seconds = secs;
  return r;
}

CheckResult check_constants() {
  const auto t0 = Clock::now();
  CheckResult r{"constants: c0 = 13 zeta(2)/(14 zeta(3)) * 2 ln^2 2 to 1e-6", true, ""};
  const Constants c = constants();
  const bool s_ok = std::abs(c.S_exact - kSExactRef) <= 1e-9;
  const bool c0_ok = std::abs(c.c0 - kC0Ref) <= 1e-6;
  const bool c1_ok = c.c1 == 3.0 * c.c0;
  r.pass = s_ok && c0_ok && c1_ok;
  r.detail = fmt("S=%.10f c0=%.7f c1=%.7f%s; quoted 0.959/1.218/3.654 stem from the "
                 "superseded numeric S and are reported, not asserted",
                 c.S_exact, c.c0, c.c1, r.pass ? "" : " MISMATCH");
  r.seconds = elapsed_s(t0);
  return r;
}

// ---- 8, 9: period comparisons ---------------------------------------------

CheckResult check_hickerson(uint64_t dmax) {
  const auto t0 = Clock::now();
  CheckResult r{"T(d) <= g(d) for every non-square d <= " + std::to_string(dmax), true, ""};
  const GTable g = g_sieve(dmax, 1, dmax);
  uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 2048)
  for (int64_t d = 2; d <= static_cast<int64_t>(dmax); ++d) {
    const PeriodResult p = cf_period(static_cast<uint64_t>(d));
    if (p.T > g.at(static_cast<uint64_t>(d)))
#pragma omp critical
      bad = static_cast<uint64_t>(d);
  }
  r.pass = bad == 0;
  r.detail = bad ? fmt("violated at d=%llu", (unsigned long long)bad) : "holds everywhere";
  r.seconds = elapsed_s(t0);
  return r;
}

CheckResult check_markov() {
  const auto t0 = Clock::now();
  CheckResult r{"Markov counting: #D(x,a) a^2 x <= sum_{x<d<=2x} T^2", true, ""};
  std::ostringstream os;
  for (const uint64_t x : {uint64_t(1000), uint64_t(10000)}) {
    for (const double a : {0.25, 0.5, 1.0, 2.0}) {
      const bool ok = chebyshev_check(x, a);
      r.pass = r.pass && ok;
      os << fmt("x=%llu a=%.2f count=%llu%s ", (unsigned long long)x, a,
                (unsigned long long)count_D(x, a).count, ok ? "" : " VIOLATED");
    }
  }
  r.detail = os.str();
  r.seconds = elapsed_s(t0);
  return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& opts) {
  std::vector<CheckResult> out;

  const std::vector<uint64_t> xs = opts.full
                                       ? std::vector<uint64_t>{10, 100, 1000, 10000, 100000, 1000000}
                                       : std::vector<uint64_t>{10, 100, 1000, 10000};
  const auto t0 = Clock::now();
  const std::vector<MomentReport> reports = moment_reports(xs);
  const double moments_secs = elapsed_s(t0);

  out.push_back(check_theta_bracket(reports, moments_secs));
  out.push_back(check_second_moment_bound(reports));
  out.push_back(check_w_identities(opts.full ? 2000 : 300));
  out.push_back(check_rho_oracles(opts.full ? 3000 : 600, opts.full ? 10000 : 1000,
                                  opts.full ? 100000 : 20000, opts.full ? 200 : 100,
                                  opts.seed));
  out.push_back(check_rho_series(100000));
  out.push_back(check_mc_integral(opts.full ? 10'000'000 : 1'000'000, opts.seed));
  out.push_back(check_constants());
  out.push_back(check_hickerson(opts.full ? 100000 : 20000));
  out.push_back(check_markov());
  out.push_back(check_trajectory(reports));
  return out;
}

int print_results(const std::vector<CheckResult>& results) {
  int failures = 0;
  int idx = 0;
  for (const CheckResult& r : results) {
    ++idx;
    if (!r.pass) ++failures;
    std::printf("[%2d/%zu] %s: %s (%.1fs)\n        %s\n", idx, results.size(),
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures;
}

}  // namespace cfm::checks
