#include <random>

#include "doctest.h"

#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"
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

MatrixExact complex_diag(Exact a, Exact b) {
  MatrixExact m = zero_exact(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("staircase shape") {
  const MatrixExact s = staircase(3);
  CHECK(s == make_exact({{0, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
  CHECK(staircase(1) == make_exact({{-1}}));
}

TEST_CASE("staircase matrices attain the maximal index") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const MatrixExact l = staircase(n);
    CHECK(hc_index(l) == n - 1);
    CHECK(is_asymptotically_stable(l));
    const HcBounds b = hc_bounds(l);
    CHECK(b.upper == static_cast<long>(n - 1));
    CHECK(b.lower == Rational(static_cast<long>(n - 1)));
    CHECK(kalman_rank_check(l) == true);
  }
}

TEST_CASE("split is Hermitian plus skew") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixExact l = oracle::random_matrix(rng, 1 + trial % 4, true);
    const Split s = split(l);
    CHECK(is_hermitian(s.hermitian));
    CHECK(s.skew == zero_exact(l.dim()) - adjoint(s.skew));
    CHECK(s.hermitian + s.skew == l);
  }
}

TEST_CASE("index is zero iff the Hermitian part is negative definite") {
  CHECK(hc_index(make_exact({{-1, 3}, {-3, -2}})) == 0u);
  CHECK(hc_index(make_exact({{-1}})) == 0u);
}

TEST_CASE("no index for an invariant subspace or purely skew generator") {
  const MatrixExact decoupled = make_exact({{0, 0}, {0, -1}});
  CHECK_FALSE(hc_index(decoupled).has_value());
  CHECK(kalman_rank_check(decoupled) == false);
  CHECK_FALSE(is_asymptotically_stable(decoupled));

  const MatrixExact rot = make_exact({{0, -1}, {1, 0}});
  CHECK_FALSE(hc_index(rot).has_value());
  const HcReport r = hc_report(rot);
  CHECK(r.conservative);
  CHECK(r.marginal);
  CHECK_FALSE(r.lower_bound.has_value());
  CHECK(kind_of([&] { hc_bounds(rot); }) == ErrorKind::ZeroDissipativePart);
}

TEST_CASE("non-semi-dissipative input is refused") {
  const MatrixExact l = make_exact({{1, 0}, {0, -1}});
  CHECK_FALSE(is_semi_dissipative(l));
  CHECK(kind_of([&] { hc_index(l); }) == ErrorKind::NotSemiDissipative);
  CHECK(kind_of([&] { hc_report(l); }) == ErrorKind::NotSemiDissipative);
}

TEST_CASE("chain is monotone and ends negative definite at the index") {
  const MatrixExact l = staircase(4);
  const auto chain = tm_chain(l, 3);
  REQUIRE(chain.size() == 4);
  for (std::size_t m = 0; m < 3; ++m) CHECK(definiteness(chain[m]) == Definiteness::NegSemiDef);
  CHECK(definiteness(chain[3]) == Definiteness::NegDef);
}

TEST_CASE("index lies between the rank bounds on random semi-dissipative matrices") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    // Low-rank dissipation makes positive indices likely.
    MatrixExact b = zero_exact(n);
    b(0, 0) = Exact(1 + static_cast<long>(rng() % 2));
    const MatrixExact s = oracle::random_matrix(rng, n, trial % 2 == 0);
    const MatrixExact l = zero_exact(n) - b * adjoint(b) + (s - adjoint(s));
    const auto idx = hc_index(l);
    if (!idx) continue;
    const HcBounds hb = hc_bounds(l);
    CHECK(Rational(static_cast<long>(*idx)) >= hb.lower);
    CHECK(static_cast<long>(*idx) <= hb.upper);
    CHECK(is_asymptotically_stable(l));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("Routh-Hurwitz on small polynomials") {
  // x^2 + x + 1, x^2 + 1, x^2 - x + 1, (x+1)(x+2)(x+3)
  CHECK(routh_hurwitz(Poly({Exact(1), Exact(1), Exact(1)})).stable);
  const StabilityCheck marginal = routh_hurwitz(Poly({Exact(1), Exact(0), Exact(1)}));
  CHECK_FALSE(marginal.stable);
  CHECK(marginal.marginal);
  CHECK_FALSE(routh_hurwitz(Poly({Exact(1), Exact(-1), Exact(1)})).stable);
  CHECK(routh_hurwitz(Poly({Exact(6), Exact(11), Exact(6), Exact(1)})).stable);
  CHECK_FALSE(routh_hurwitz(Poly({Exact(0), Exact(1)})).stable);
}

TEST_CASE("stability of complex matrices") {
  CHECK(is_asymptotically_stable(complex_diag(Exact(-1, 1), Exact(-2))));
  CHECK_FALSE(is_asymptotically_stable(complex_diag(Exact(0, 1), Exact(-2))));
  CHECK_FALSE(is_asymptotically_stable(complex_diag(Exact(Rational(1, 10), -5), Exact(-2))));
}

TEST_CASE("report fields") {
  const HcReport r = hc_report(staircase(3));
  CHECK(r.n == 3);
  CHECK(r.semi_dissipative);
  CHECK(r.hc_index == 2u);
  CHECK(r.rank_lh == 1);
  CHECK(r.tm_chain.size() == 3);
  CHECK(r.asymptotically_stable);
  CHECK_FALSE(r.conservative);
}
