#pragma once

#include <cstdint>

namespace cfm {

// A candidate quadruple (m1, m2, q1, q2).  Window and counting operations
// require every field in [1, 2^31 - 1] and x < 2^62 so that all squares and
// scaled products stay inside int64.
struct Quadruple {
  uint64_t m1, m2, q1, q2;
};

// Admissible k for a quadruple form the scaled-integer window
//   Fnum < k * q1 <= Gnum,
// where Fnum = max{m1^2, m2^2, (q1-m1)^2, (q2-m2)^2} - m1^2 and
//       Gnum = min{x, (q1+m1)^2, (q2+m2)^2} - m1^2
// (that is, Fnum = q1 * f and Gnum = q1 * g for the rational window (f, g]).
struct WindowBounds {
  int64_t Fnum;
  int64_t Gnum;
  uint64_t q1;
};

// gcd split q1 = Delta kappa1, q2 = Delta kappa2 with (kappa1, kappa2) = 1.
// nu = (m2^2 - m1^2) / Delta is defined only when Delta divides the
// difference; otherwise the congruence k q1 == m2^2 - m1^2 (mod q2) has no
// solutions.
struct GcdSplit {
  uint64_t Delta;
  uint64_t kappa1;
  uint64_t kappa2;
  int64_t nu;
  bool nu_defined;
};

WindowBounds window_bounds(uint64_t x, const Quadruple& t);
GcdSplit gcd_split(const Quadruple& t);

// Membership in A(x): range constraints m_i <= sqrt(x), q_i <= sqrt(x) + m_i
// (in exact integer form), q1 <= q2, and a nonempty window Fnum < Gnum.
bool in_A(uint64_t x, const Quadruple& t);

// #{k : Fnum < k q1 <= Gnum, k q1 == m2^2 - m1^2 (mod q2)} by direct loop.
uint64_t count_k_direct(uint64_t x, const Quadruple& t);

// Same count through the residue solution k == nu * inv(kappa1) (mod kappa2)
// and the floor difference
//   floor((Gnum - kap q1) / (q1 kappa2)) - floor((Fnum - kap q1) / (q1 kappa2)),
// with floor division toward -infinity (numerators may be negative).
// Returns 0 for an empty window or an unsolvable congruence.
uint64_t count_k_modular(uint64_t x, const Quadruple& t);

inline constexpr uint64_t kWBruteforceCap = 5000;

// W(x) = #{pairs of triples (m_i, q_i, k_i), i = 1, 2, with
// |k_i - q_i| < 2 m_i, k_i >= 1, m_1^2 + k_1 q_1 = m_2^2 + k_2 q_2 <= x}
// = sum over d <= x of (number of triples at d)^2.  Slow oracle; rejects
// x above kWBruteforceCap.
uint64_t w_bruteforce(uint64_t x);

// One-stop record of the redundant W routes:
//   W          full pair count (w_bruteforce),
//   W_diag     pairs with q1 = q2,
//   W_le       pairs with q1 <= q2   (so W = 2 W_le - W_diag exactly),
//   W2_direct  sum of count_k_direct over A(x) quads with q1 <= q2,
//   W2_modular the same sum through count_k_modular.
struct WIdentities {
  uint64_t W;
  uint64_t W_diag;
  uint64_t W_le;
  uint64_t W2_direct;
  uint64_t W2_modular;
};

WIdentities w_identities(uint64_t x);

}  // namespace cfm
