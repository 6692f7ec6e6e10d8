#pragma once

#include <string>
#include <vector>

#include "hypostab/hpmatrix.hpp"
#include "hypostab/matrix.hpp"
#include "hypostab/poly.hpp"

namespace hypostab {

/// Explicit Runge-Kutta scheme: strictly lower triangular `a`, weights `b`.
struct ButcherTableau {
  std::size_t stages = 0;
  MatrixExact a;
  std::vector<Exact> b;

  /// Throws NotExplicit if `a` has a nonzero entry on or above the diagonal,
  /// InvalidArgument on size mismatches.
  void validate() const;
};

namespace tableaux {
ButcherTableau forward_euler();
ButcherTableau heun();
ButcherTableau kutta3();
ButcherTableau classical_rk4();
}  // namespace tableaux

/// Stability polynomial R(z) plus the order read off its coefficients.
struct StabilityFn {
  Poly poly;
  /// Largest p with coefficient j equal to 1/j! for all j <= p.
  unsigned order = 0;
  std::size_t stages = 0;
};

/// Order detected from the coefficients of R alone.
unsigned detect_order(const Poly& r);

/// R(z) = 1 + z b^T (I - zA)^{-1} 1, with the inverse as the finite
/// Neumann sum over the nilpotent A.
StabilityFn stability_function(const ButcherTableau& t);

/// Truncated exponential sum_{j<=p} z^j/j!, the s = p explicit schemes.
StabilityFn taylor_scheme(unsigned p);

/// Horner evaluation of R at tau*L.
MatrixExact evaluate_at_matrix(const StabilityFn& r, const MatrixExact& l, const Exact& tau);
MatrixHp evaluate_at_matrix(const StabilityFn& r, const MatrixHp& l, const HpFloat& tau);
MatrixHp evaluate_at_matrix(const StabilityFn& r, const MatrixExact& l, const HpFloat& tau,
                            long bits);

/// R(tau L) as a matrix of polynomials in tau.
TauPolyMatrix stability_matrix_series(const StabilityFn& r, const MatrixExact& l);

Rational factorial(unsigned k);

}  // namespace hypostab
