#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypostab/exact.hpp"
#include "hypostab/matrix.hpp"

namespace hypostab {

/// Univariate polynomial with exact complex-rational coefficients,
/// coefficient k multiplying x^k. The highest stored coefficient is never
/// zero; the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  Poly(Exact constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Exact(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Exact> coeffs);

  /// c * x^k
  static Poly monomial(Exact c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the first nonzero coefficient; -1 for the zero polynomial.
  long lowest_order() const;

  const Exact& coeff(std::size_t k) const;
  const std::vector<Exact>& coeffs() const { return c_; }

  /// Conjugates the coefficients (the variable is taken as real).
  Poly conj() const;
  Exact evaluate(const Exact& x) const;
  /// Drops all terms of degree > k.
  Poly truncated(std::size_t k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Exact& rhs);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Exact& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable, e.g. "1 + 1*x + 1/2*x^2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Exact> c_;
};

using TauPoly = Poly;
using TauPolyMatrix = SquareMatrix<Poly>;

/// Conjugate transpose for a real variable.
TauPolyMatrix adjoint(const TauPolyMatrix& m);
long max_degree(const TauPolyMatrix& m);
/// Entrywise evaluation.
MatrixExact evaluate(const TauPolyMatrix& m, const Exact& x);
/// Matrix of the x^k coefficients.
MatrixExact coefficient_matrix(const TauPolyMatrix& m, std::size_t k);

}  // namespace hypostab
