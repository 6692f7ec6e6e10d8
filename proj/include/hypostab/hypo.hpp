#pragma once

#include <optional>
#include <vector>

#include "hypostab/linalg.hpp"
#include "hypostab/matrix.hpp"

namespace hypostab {

struct Split {
  MatrixExact hermitian;  // (L + L*)/2
  MatrixExact skew;       // (L - L*)/2
};

Split split(const MatrixExact& l);

bool is_semi_dissipative(const MatrixExact& l);

/// T_m = sum_{j<=m} L_S^j L_H (L_S^*)^j for m = 0..max_m.
std::vector<MatrixExact> tm_chain(const MatrixExact& l, std::size_t max_m);

/// Least m in 0..n-1 with T_m negative definite, or nullopt when none
/// exists. Throws NotSemiDissipative.
std::optional<std::size_t> hc_index(const MatrixExact& l);

struct HcBounds {
  Rational lower;  // (n - rank L_H) / rank L_H
  long upper;      // n - rank L_H
};

/// Throws NotSemiDissipative, or ZeroDissipativePart when L_H = 0.
HcBounds hc_bounds(const MatrixExact& l);

/// Tridiagonal N x N matrix: +1 below the diagonal, -1 above it, zero
/// diagonal except for a -1 in the last position.
MatrixExact staircase(std::size_t n);

struct StabilityCheck {
  bool stable = false;
  /// A full row of the Routh array vanished: roots on the imaginary axis
  /// (or symmetric about the origin).
  bool marginal = false;
};

/// Routh-Hurwitz on the exact characteristic polynomial. For a complex
/// matrix the test runs on the real polynomial p(x) * conj(p)(x), whose
/// roots are those of p and their conjugates.
StabilityCheck asymptotic_stability(const MatrixExact& l);
bool is_asymptotically_stable(const MatrixExact& l);
/// Routh-Hurwitz for a polynomial with real coefficients.
StabilityCheck routh_hurwitz(const Poly& p);

/// Kalman-rank cross check, only available when -L_H is diagonal with
/// entries that are squares of rationals (so sqrt(-L_H) is exact):
/// returns whether rank [B, L_S B, ..., L_S^{n-1} B] = n.
std::optional<bool> kalman_rank_check(const MatrixExact& l);

struct TmRecord {
  std::size_t m;
  Definiteness definiteness;
};

struct HcReport {
  std::size_t n = 0;
  bool semi_dissipative = false;
  std::optional<std::size_t> hc_index;
  std::size_t rank_lh = 0;
  std::optional<Rational> lower_bound;
  std::optional<long> upper_bound;
  bool asymptotically_stable = false;
  bool marginal = false;
  std::vector<TmRecord> tm_chain;
  std::optional<bool> kalman;
  /// Purely skew generator: norm-conservative, not hypocoercive.
  bool conservative = false;
};

/// Collects everything above. Throws NotSemiDissipative.
HcReport hc_report(const MatrixExact& l);

}  // namespace hypostab
