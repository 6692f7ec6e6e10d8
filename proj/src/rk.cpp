#include "hypostab/rk.hpp"

#include "hypostab/error.hpp"

namespace hypostab {

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

void ButcherTableau::validate() const {
  if (stages == 0) throw Error(ErrorKind::InvalidArgument, "tableau needs at least one stage");
  if (a.dim() != stages || b.size() != stages) {
    throw Error(ErrorKind::InvalidArgument, "tableau sizes do not match the stage count");
  }
  for (std::size_t i = 0; i < stages; ++i) {
    for (std::size_t j = i; j < stages; ++j) {
      if (!a(i, j).is_zero()) {
        throw Error(ErrorKind::NotExplicit,
                    "coefficient matrix is not strictly lower triangular (implicit scheme)");
      }
    }
  }
}

namespace tableaux {
namespace {

ButcherTableau make(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  ButcherTableau t;
  t.stages = b.size();
  t.a = zero_exact(t.stages);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t.a(i, j) = Exact(a[i][j]);
  }
  for (auto& w : b) t.b.emplace_back(w);
  return t;
}

}  // namespace

ButcherTableau forward_euler() { return make({{0}}, {1}); }

ButcherTableau heun() { return make({{0, 0}, {1, 0}}, {Rational(1, 2), Rational(1, 2)}); }

ButcherTableau kutta3() {
  return make({{0, 0, 0}, {Rational(1, 2), 0, 0}, {-1, 2, 0}},
              {Rational(1, 6), Rational(2, 3), Rational(1, 6)});
}

ButcherTableau classical_rk4() {
  return make({{0, 0, 0, 0}, {Rational(1, 2), 0, 0, 0}, {0, Rational(1, 2), 0, 0}, {0, 0, 1, 0}},
              {Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)});
}

}  // namespace tableaux

unsigned detect_order(const Poly& r) {
  if (!(r.coeff(0) == Exact(1))) return 0;
  unsigned p = 0;
  while (r.coeff(p + 1) == Exact(1 / factorial(p + 1))) ++p;
  return p;
}

StabilityFn stability_function(const ButcherTableau& t) {
  t.validate();
  const std::size_t s = t.stages;
  // Coefficient of z^{k+1} is b^T A^k 1.
  std::vector<Exact> coeffs(s + 1);
  coeffs[0] = Exact(1);
  std::vector<Exact> v(s, Exact(1));  // A^k 1
  for (std::size_t k = 0; k < s; ++k) {
    Exact c;
    for (std::size_t i = 0; i < s; ++i) c += t.b[i] * v[i];
    coeffs[k + 1] = c;
    std::vector<Exact> next(s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < i; ++j) next[i] += t.a(i, j) * v[j];
    }
    v = std::move(next);
  }
  StabilityFn fn;
  fn.poly = Poly(std::move(coeffs));
  fn.order = detect_order(fn.poly);
  fn.stages = s;
  return fn;
}

StabilityFn taylor_scheme(unsigned p) {
  if (p == 0) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  std::vector<Exact> coeffs;
  for (unsigned j = 0; j <= p; ++j) coeffs.emplace_back(1 / factorial(j));
  return {Poly(std::move(coeffs)), p, p};
}

MatrixExact evaluate_at_matrix(const StabilityFn& r, const MatrixExact& l, const Exact& tau) {
  const std::size_t n = l.dim();
  const MatrixExact z = scaled(l, tau);
  const auto& c = r.poly.coeffs();
  MatrixExact acc = zero_exact(n);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

MatrixHp evaluate_at_matrix(const StabilityFn& r, const MatrixHp& l, const HpFloat& tau) {
  const std::size_t n = l.dim();
  const long bits = l.precision();
  MatrixHp z = l;
  z *= tau;
  const auto& c = r.poly.coeffs();
  if (c.empty()) return MatrixHp(HpMatrix(n, bits));
  MatrixHp acc(HpMatrix(n, bits));
  acc.add_diagonal(HpComplex(c.back(), bits));
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    acc = acc * z;
    acc.add_diagonal(HpComplex(*it, bits));
  }
  return acc;
}

MatrixHp evaluate_at_matrix(const StabilityFn& r, const MatrixExact& l, const HpFloat& tau,
                            long bits) {
  return evaluate_at_matrix(r, MatrixHp::from_exact(l, bits), tau);
}

TauPolyMatrix stability_matrix_series(const StabilityFn& r, const MatrixExact& l) {
  const std::size_t n = l.dim();
  TauPolyMatrix out(n, Poly{});
  MatrixExact lk = identity_exact(n);
  for (std::size_t k = 0; k < r.poly.coeffs().size(); ++k) {
    const Exact& ck = r.poly.coeff(k);
    if (!ck.is_zero()) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!lk(i, j).is_zero()) out(i, j) += Poly::monomial(ck * lk(i, j), k);
        }
      }
    }
    lk = lk * l;
  }
  return out;
}

}  // namespace hypostab
