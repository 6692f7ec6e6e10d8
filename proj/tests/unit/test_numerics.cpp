#include <random>

#include "doctest.h"

#include "hypostab/error.hpp"
#include "hypostab/exact.hpp"
#include "hypostab/hpfloat.hpp"
#include "hypostab/hpmatrix.hpp"
#include "hypostab/linalg.hpp"
#include "hypostab/poly.hpp"
#include "oracles.hpp"

using namespace hypostab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

bool close(const HpFloat& a, const HpFloat& b, long log2_tol) {
  return abs(a - b) <= HpFloat::pow2(log2_tol, a.precision());
}

}  // namespace

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(parse_rational("-1/6") == Rational(-1, 6));
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(to_string(Rational(3, -9)) == "-1/3");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(kind_of([] { parse_rational("0.5"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rational("1e3"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::Parse);
}

TEST_CASE("complex rationals") {
  const Exact a(Rational(1, 2), Rational(1));
  const Exact b(Rational(-1), Rational(2, 3));
  CHECK(a * b == Exact(Rational(-1, 2) - Rational(2, 3), Rational(1, 3) - 1));
  CHECK((a / b) * b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
  CHECK((a * a.conj()).re() == a.norm2());
  CHECK(kind_of([&] { a / Exact(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("polynomials trim and multiply") {
  const Poly x = Poly::monomial(Exact(1), 1);
  const Poly p = (x + Poly(1)) * (x - Poly(1));
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Exact(-1));
  CHECK(p.coeff(1) == Exact(0));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(Poly::monomial(Exact(3), 4).lowest_order() == 4);
  CHECK(p.evaluate(Exact(3)) == Exact(8));
  CHECK(p.truncated(1) == Poly(-1));
}

TEST_CASE("HpFloat keeps the larger precision and formats") {
  const HpFloat a(1, 128);
  const HpFloat b(3, 256);
  CHECK((a / b).precision() == 256);
  CHECK(HpFloat::parse("1.25", 64).to_double() == 1.25);
  CHECK(HpFloat::parse("-3/4", 64).to_double() == -0.75);
  CHECK(HpFloat::parse("1.3e-6", 64).to_scientific(2) == "1.3e-06");
  CHECK(HpFloat::pow2(-600, 64).log2_abs() == doctest::Approx(-600));
  CHECK(ldexp(HpFloat(3, 64), 2) == HpFloat(12, 64));
  CHECK(HpFloat(2, 64) < HpFloat(3, 64));
  CHECK(kind_of([] { HpFloat::parse("abc", 64); }) == ErrorKind::Parse);

  const HpFloat third(Rational(1, 3), 512);
  const HpFloat back = HpFloat::parse(third.to_decimal(), 512);
  CHECK(close(back, third, -505));
}

TEST_CASE("characteristic polynomial matches the 3x3 cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const MatrixExact m = oracle::random_matrix(rng, 3, trial % 2 == 1);
    const Poly p = char_poly(m);
    const auto ref = oracle::char_poly_3x3(m);
    for (std::size_t k = 0; k < 4; ++k) CHECK(p.coeff(k) == ref[k]);
  }
}

TEST_CASE("characteristic polynomial of the 3x3 staircase") {
  // L = [[0,-1,0],[1,0,-1],[0,1,-1]]: lambda^3 + lambda^2 + 2 lambda + 1.
  const MatrixExact l = make_exact({{0, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  CHECK(char_poly(l) == Poly({Exact(1), Exact(2), Exact(1), Exact(1)}));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 5; ++n) {
    const MatrixExact m = oracle::random_matrix(rng, n, true);
    const Poly p = char_poly(m);
    MatrixExact acc = zero_exact(n);
    for (long k = p.degree(); k >= 0; --k) {
      acc = acc * m + scaled(identity_exact(n), p.coeff(static_cast<std::size_t>(k)));
    }
    CHECK(is_zero(acc));
  }
}

TEST_CASE("exact determinant: Hilbert 3x3 and random agreement with Leibniz") {
  MatrixExact h(3, Exact(0));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = Exact(Rational(1, static_cast<long>(i + j + 1)));
  }
  CHECK(det_exact(h) == Exact(Rational(1, 2160)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixExact m = oracle::random_matrix(rng, 1 + trial % 5, trial % 3 == 0);
    CHECK(det_exact(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("polynomial-matrix determinant agrees with Leibniz") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = oracle::random_poly_matrix(rng, 1 + trial % 4);
    CHECK(poly_matrix_det(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("rank and definiteness") {
  CHECK(rank_exact(make_exact({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_exact(zero_exact(3)) == 0);
  CHECK(rank_exact(identity_exact(4)) == 4);
  CHECK(rank_exact(std::vector<std::vector<Exact>>{{1, 0, 1}, {0, 1, 1}}) == 2);

  CHECK(definiteness(make_exact({{-2, 1}, {1, -2}})) == Definiteness::NegDef);
  CHECK(definiteness(make_exact({{-1, 1}, {1, -1}})) == Definiteness::NegSemiDef);
  CHECK(definiteness(make_exact({{1, 0}, {0, -1}})) == Definiteness::Indefinite);
  CHECK(definiteness(make_exact({{2, 1}, {1, 2}})) == Definiteness::PosDef);
  CHECK(definiteness(zero_exact(2)) == Definiteness::Zero);
  MatrixExact herm = make_exact({{-2, 0}, {0, -2}});
  herm(0, 1) = Exact(0, 1);
  herm(1, 0) = Exact(0, -1);
  CHECK(definiteness(herm) == Definiteness::NegDef);
  CHECK(kind_of([] { definiteness(make_exact({{0, 1}, {0, 0}})); }) == ErrorKind::NotHermitian);
}

TEST_CASE("Jacobi eigenvalues of known symmetric matrices") {
  const long bits = 256;
  // [[2,1],[1,2]] has eigenvalues 1 and 3.
  const auto ev = hermitian_eigenvalues(MatrixHp::from_exact(make_exact({{2, 1}, {1, 2}}), bits));
  REQUIRE(ev.size() == 2);
  CHECK(close(ev[0], HpFloat(1, bits), -240));
  CHECK(close(ev[1], HpFloat(3, bits), -240));

  // Complex Hermitian [[1, i],[-i, 1]] has eigenvalues 0 and 2.
  MatrixExact h = make_exact({{1, 0}, {0, 1}});
  h(0, 1) = Exact(0, 1);
  h(1, 0) = Exact(0, -1);
  const auto evc = hermitian_eigenvalues(MatrixHp::from_exact(h, bits));
  REQUIRE(evc.size() == 2);
  CHECK(close(evc[0], HpFloat(0, bits), -240));
  CHECK(close(evc[1], HpFloat(2, bits), -240));
}

TEST_CASE("spectral norm against power iteration") {
  const long bits = 512;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const MatrixExact m = oracle::random_matrix(rng, 1 + trial % 6, trial % 2 == 0);
    const HpFloat got = spectral_norm(MatrixHp::from_exact(m, bits));
    CHECK(close(got, oracle::power_iteration_norm(m, bits), -128));
  }
  CHECK(spectral_norm(MatrixHp::from_exact(zero_exact(3), bits)).is_zero());
}

TEST_CASE("matrix exponential of the rotation generator is a rotation") {
  const long bits = 512;
  const MatrixExact l = make_exact({{0, -1}, {1, 0}});
  for (const char* t : {"1/1024", "1/3", "2", "7"}) {
    const HpFloat tau = HpFloat::parse(t, bits);
    const MatrixHp e = matrix_exp(l, tau, bits);
    const HpFloat c = oracle::mpfr_cos(tau);
    const HpFloat s = oracle::mpfr_sin(tau);
    CHECK(close(e.re()(0, 0), c, -480));
    CHECK(close(e.re()(0, 1), -s, -480));
    CHECK(close(e.re()(1, 0), s, -480));
    CHECK(close(e.re()(1, 1), c, -480));
  }
}

TEST_CASE("matrix exponential of a nilpotent matrix is its finite series") {
  const long bits = 256;
  const MatrixExact n = make_exact({{0, 2, 1}, {0, 0, 3}, {0, 0, 0}});
  // I + N + N^2/2
  const MatrixExact ref = identity_exact(3) + n + scaled(n * n, Exact(Rational(1, 2)));
  const MatrixHp e = matrix_exp(n, HpFloat(1, bits), bits);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(close(e.re()(i, j), HpFloat(ref(i, j).re(), bits), -240));
  }
}
