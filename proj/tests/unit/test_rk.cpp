#include <random>

#include "doctest.h"

#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"
#include "hypostab/rk.hpp"
#include "oracles.hpp"

using namespace hypostab;

namespace {

Poly poly_of(std::initializer_list<Rational> c) {
  std::vector<Exact> v;
  for (const auto& q : c) v.emplace_back(q);
  return Poly(v);
}

}  // namespace

TEST_CASE("stability functions of the classical tableaux") {
  CHECK(stability_function(tableaux::forward_euler()).poly == poly_of({1, 1}));
  // Heun by hand: k1 = z, k2 = z(1 + z), R = 1 + (k1 + k2)/2.
  CHECK(stability_function(tableaux::heun()).poly == poly_of({1, 1, Rational(1, 2)}));
  CHECK(stability_function(tableaux::kutta3()).poly == poly_of({1, 1, Rational(1, 2), Rational(1, 6)}));
  const StabilityFn rk4 = stability_function(tableaux::classical_rk4());
  CHECK(rk4.poly == poly_of({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  CHECK(rk4.order == 4);
  CHECK(rk4.stages == 4);
  CHECK(rk4.poly == taylor_scheme(4).poly);
}

TEST_CASE("order is read from the coefficients") {
  // Two stages, a21 = 1/3, b = (1/4, 3/4): R = 1 + z + z^2/4.
  ButcherTableau t;
  t.stages = 2;
  t.a = zero_exact(2);
  t.a(1, 0) = Exact(Rational(1, 3));
  t.b = {Exact(Rational(1, 4)), Exact(Rational(3, 4))};
  const StabilityFn r = stability_function(t);
  CHECK(r.poly == poly_of({1, 1, Rational(1, 4)}));
  CHECK(r.order == 1);
  CHECK(detect_order(poly_of({1, Rational(1, 2)})) == 0);
  for (unsigned p = 1; p <= 12; ++p) CHECK(taylor_scheme(p).order == p);
  CHECK_THROWS_AS(taylor_scheme(0), Error);
}

TEST_CASE("implicit tableaux are rejected") {
  ButcherTableau t;
  t.stages = 1;
  t.a = make_exact({{Exact(Rational(1, 2))}});
  t.b = {Exact(1)};
  CHECK_THROWS_AS(stability_function(t), Error);
  try {
    t.validate();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotExplicit);
  }
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("exact and high-precision evaluation agree") {
  const long bits = 512;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixExact l = oracle::random_matrix(rng, 1 + trial % 4, trial % 2 == 0);
    const StabilityFn r = taylor_scheme(1 + trial % 6);
    const Rational tau(1, 3 + trial);
    const MatrixExact exact = evaluate_at_matrix(r, l, Exact(tau));
    const MatrixHp hp = evaluate_at_matrix(r, l, HpFloat(tau, bits), bits);
    for (std::size_t i = 0; i < l.dim(); ++i) {
      for (std::size_t j = 0; j < l.dim(); ++j) {
        const HpComplex z = hp.at(i, j);
        CHECK(abs(z.re - HpFloat(exact(i, j).re(), bits)) <= HpFloat::pow2(-480, bits));
        CHECK(abs(z.im - HpFloat(exact(i, j).im(), bits)) <= HpFloat::pow2(-480, bits));
      }
    }
  }
}

TEST_CASE("series matrix evaluates to the exact matrix") {
  const MatrixExact l = staircase(3);
  const StabilityFn r = taylor_scheme(4);
  const TauPolyMatrix series = stability_matrix_series(r, l);
  const Exact tau(Rational(2, 7));
  CHECK(evaluate(series, tau) == evaluate_at_matrix(r, l, tau));
}
