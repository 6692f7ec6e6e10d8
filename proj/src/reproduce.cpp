#include "hypostab/reproduce.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hypostab/decay.hpp"
#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"
#include "hypostab/stab.hpp"

namespace hypostab {

bool matches_two_significant(const HpFloat& observed, double expected) {
  if (!(expected > 0) || observed.sign() <= 0) return false;
  const double obs = observed.to_double();
  const double unit = std::pow(10.0, std::floor(std::log10(expected)) - 1);
  return std::llround(obs / unit) == std::llround(expected / unit);
}

namespace {

using Clock = std::chrono::steady_clock;

struct RowRunner {
  std::vector<ReproduceRow>& rows;
  const std::function<void(const ReproduceRow&)>& on_row;

  template <class F>
  void run(std::string id, std::string expected, F&& body) {
    ReproduceRow row;
    row.id = std::move(id);
    row.expected = std::move(expected);
    const auto start = Clock::now();
    try {
      body(row);
    } catch (const Error& e) {
      row.pass = false;
      row.reason = to_string(e.kind());
      row.observed = e.what();
    }
    row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    rows.push_back(row);
    if (on_row) on_row(rows.back());
  }
};

std::string describe(const std::optional<std::size_t>& idx) {
  return idx ? std::to_string(*idx) : std::string("absent");
}

}  // namespace

std::vector<ReproduceRow> reproduce_paper(const ReproduceOptions& opts,
                                          const std::function<void(const ReproduceRow&)>& on_row) {
  std::vector<ReproduceRow> rows;
  RowRunner runner{rows, on_row};
  const long bits = opts.precision_bits;

  for (std::size_t n = 1; n <= 6; ++n) {
    runner.run("hc-index staircase(" + std::to_string(n) + ")", std::to_string(n - 1), [&](ReproduceRow& row) {
      const MatrixExact l = staircase(n);
      const auto idx = hc_index(l);
      const auto bounds_ok = n == 1 || (hc_bounds(l).upper == static_cast<long>(n - 1) &&
                                        hc_bounds(l).lower == Rational(static_cast<long>(n - 1)));
      row.observed = describe(idx) + (bounds_ok ? "" : " (bounds not attained)");
      row.pass = idx == n - 1 && bounds_ok && is_asymptotically_stable(l);
    });
  }

  for (unsigned p : {4u, 8u}) {
    const unsigned big_n = 1 + p / 2;
    const Rational c = closed_form_c(p);
    std::ostringstream expected;
    expected << "order " << big_n * big_n << ", coeff " << to_string(c) << " (< 0)";
    runner.run("det-leading p=" + std::to_string(p), expected.str(), [&](ReproduceRow& row) {
      const auto d = det_leading_term(staircase(big_n), taylor_scheme(p));
      row.observed = "order " + std::to_string(d.order) + ", coeff " + d.coeff.to_string();
      row.pass = d.order == static_cast<long>(big_n * big_n) && d.coeff == Exact(c) && sgn(c) < 0 &&
                 (p != 4 || c == Rational(-1, 216));
    });
  }

  struct SweepCase {
    unsigned p;
    const char* eps;
    double expected;
  };
  for (const SweepCase sc : {SweepCase{4, "0.304", 1.3e-6}, SweepCase{8, "0.027", 9.0e-22},
                             SweepCase{12, "0.027", 7.2e-46}}) {
    std::ostringstream expected;
    expected << std::setprecision(2) << std::scientific << sc.expected << " (2 s.f.)";
    runner.run("sweep p=" + std::to_string(sc.p) + " eps=" + sc.eps, expected.str(), [&](ReproduceRow& row) {
      SweepOptions so;
      so.precision_bits = bits;
      so.threads = opts.threads;
      const auto res = norm_sweep(staircase(1 + sc.p / 2), taylor_scheme(sc.p), HpFloat::parse(sc.eps, bits),
                                  opts.grid_points, so);
      row.observed = res.max_excess.to_scientific(3) + " at tau=" + res.argmax_tau.to_scientific(4);
      row.pass = matches_two_significant(res.max_excess, sc.expected);
    });
  }

  for (unsigned p : {4u, 8u, 12u}) {
    runner.run("verdict p=" + std::to_string(p) + " vs staircase(" + std::to_string(1 + p / 2) + ")",
               "CounterexampleFound, persists 8 halvings", [&](ReproduceRow& row) {
                 VerdictOptions vo;
                 vo.precision_bits = bits;
                 vo.threads = opts.threads;
                 const auto v = strong_stability_verdict(taylor_scheme(p), {staircase(1 + p / 2)}, vo);
                 row.observed = to_string(v.status);
                 if (v.witness) row.observed += ", excess " + v.witness->excess.to_scientific(3);
                 row.pass = v.status == VerdictStatus::CounterexampleFound &&
                            v.per_matrix.front().round_excess.size() == vo.rounds + 1;
               });
  }

  struct LasmCase {
    unsigned p;
    unsigned m;
    bool with_staircase;
  };
  for (const LasmCase lc : {LasmCase{3, 1, true}, LasmCase{4, 1, false}, LasmCase{5, 2, false},
                            LasmCase{4, 2, true}}) {
    const bool holds = 2 * lc.m + 1 <= lc.p;
    std::string id = "lasm p=" + std::to_string(lc.p) + " m=" + std::to_string(lc.m);
    if (lc.with_staircase) id += " +staircase(" + std::to_string(lc.m + 1) + ")";
    runner.run(id, holds ? "0 violations" : ">= 1 violation", [&](ReproduceRow& row) {
      LasmOptions lo;
      lo.precision_bits = bits;
      std::vector<MatrixExact> extra;
      if (lc.with_staircase) extra.push_back(staircase(lc.m + 1));
      const auto rep = lasm_property_check(lc.p, lc.m, opts.lasm_samples, opts.seed, extra, lo);
      row.observed = std::to_string(rep.violations) + " violations in " + std::to_string(rep.tested);
      row.pass = rep.matches_expectation && rep.tested >= opts.lasm_samples;
    });
  }

  for (std::size_t n = 1; n <= 3; ++n) {
    runner.run("decay staircase(" + std::to_string(n) + ")",
               "a = " + std::to_string(2 * n - 1) + " within 5%", [&](ReproduceRow& row) {
                 DecayFitOptions fo;
                 fo.precision_bits = bits;
                 const auto fit = fit_short_time(staircase(n), fo);
                 const double a = fit.a_est.to_double();
                 const double target = static_cast<double>(fit.a_predicted);
                 row.observed = "a_est " + fit.a_est.to_scientific(6);
                 row.pass = fit.a_predicted == static_cast<long>(2 * n - 1) && std::fabs(a - target) <= 0.05 * target;
               });
  }

  VerdictOptions vo;
  vo.precision_bits = bits;
  vo.threads = opts.threads;
  for (unsigned p : {1u, 2u}) {
    runner.run("classify p=" + std::to_string(p) + " vs rotation", "CounterexampleFound", [&](ReproduceRow& row) {
      const auto v = strong_stability_verdict(taylor_scheme(p), {rotation_generator()}, vo);
      row.observed = to_string(v.status);
      row.pass = v.status == VerdictStatus::CounterexampleFound;
    });
  }
  runner.run("classify p=3 vs test family", "NoViolationOnTestSet", [&](ReproduceRow& row) {
    const auto v = strong_stability_verdict(taylor_scheme(3), default_test_family(), vo);
    row.observed = to_string(v.status);
    row.pass = v.status == VerdictStatus::NoViolationOnTestSet;
  });

  return rows;
}

}  // namespace hypostab
