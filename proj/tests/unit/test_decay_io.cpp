#include <sstream>

#include "doctest.h"

#include "hypostab/decay.hpp"
#include "hypostab/error.hpp"
#include "hypostab/io.hpp"

using namespace hypostab;
using hypostab::io::json;

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

}  // namespace

TEST_CASE("short-time decay exponents of the staircase family") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const DecayFit fit = fit_short_time(staircase(n));
    CHECK(fit.hc_index == n - 1);
    CHECK(fit.a_predicted == static_cast<long>(2 * n - 1));
    CHECK(fit.a_est.to_double() == doctest::Approx(2.0 * n - 1).epsilon(0.05));
    CHECK(fit.samples.size() == 21);
  }
}

TEST_CASE("propagator norm is nonincreasing for a semi-dissipative generator") {
  std::vector<HpFloat> ts;
  for (int k = 0; k <= 8; ++k) ts.push_back(HpFloat(Rational(k, 4), 256));
  const auto curve = propagator_norm_curve(staircase(3), ts, 256);
  CHECK(curve.front().norm == HpFloat(1, 256));
  for (std::size_t k = 1; k < curve.size(); ++k) {
    CHECK(curve[k].norm <= curve[k - 1].norm + HpFloat::pow2(-240, 256));
  }
}

TEST_CASE("decay fit preconditions") {
  CHECK(kind_of([] { fit_short_time(make_exact({{0, -1}, {1, 0}})); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { fit_short_time(make_exact({{1}})); }) == ErrorKind::NotSemiDissipative);
  DecayFitOptions lo;
  lo.precision_bits = 64;
  CHECK(kind_of([&] { fit_short_time(staircase(3), lo); }) == ErrorKind::FitDegenerate);
}

TEST_CASE("matrix JSON round trip with complex entries") {
  const json j = json::parse(R"([["-1/6", {"re": "1", "im": "2/3"}], [3, "0"]])");
  const MatrixExact m = io::matrix_from_json(j);
  CHECK(m(0, 0) == Exact(Rational(-1, 6)));
  CHECK(m(0, 1) == Exact(Rational(1), Rational(2, 3)));
  CHECK(m(1, 0) == Exact(3));
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
}

TEST_CASE("malformed matrices are parse errors") {
  for (const char* text : {R"([["0.5"]])", R"([["1", "2"]])", R"([])", R"({"a": 1})", R"([[1.5]])",
                           R"([[{"im": "1"}]])"}) {
    CAPTURE(text);
    CHECK(kind_of([&] { io::matrix_from_json(json::parse(text)); }) == ErrorKind::Parse);
  }
}

TEST_CASE("tableau JSON") {
  const json heun = json::parse(R"({"s": 2, "a": [["0", "0"], ["1", "0"]], "b": ["1/2", "1/2"]})");
  const ButcherTableau t = io::tableau_from_json(heun);
  CHECK(stability_function(t).poly == taylor_scheme(2).poly);

  const json implicit = json::parse(R"({"s": 1, "a": [["1/2"]], "b": ["1"]})");
  CHECK(kind_of([&] { io::tableau_from_json(implicit); }) == ErrorKind::NotExplicit);
  CHECK(kind_of([] { io::tableau_from_json(json::parse(R"({"s": 2, "a": [], "b": []})")); }) == ErrorKind::Parse);
}

TEST_CASE("high-precision values serialise with their precision") {
  const json j = io::hp_to_json(HpFloat(Rational(1, 3), 128));
  CHECK(j.at("precision_bits") == 128);
  CHECK(j.at("value").get<std::string>().rfind("3.33333", 0) == 0);
}

TEST_CASE("curve CSV layout") {
  std::ostringstream os;
  io::write_curve_csv(os, {CurvePoint{HpFloat(0, 64), HpFloat(1, 64), HpFloat(0, 64)}});
  CHECK(os.str().rfind("tau,norm,excess\n", 0) == 0);
}
