#include "hypostab/stab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"

namespace hypostab {

TauPolyMatrix m_matrix_series(const MatrixExact& l, const StabilityFn& r) {
  const TauPolyMatrix rs = stability_matrix_series(r, l);
  TauPolyMatrix out = adjoint(rs) * rs;
  for (auto& p : out.entries()) p = -p;
  for (std::size_t i = 0; i < l.dim(); ++i) out(i, i) += Poly(Exact(1));
  return out;
}

DetLeadingTerm det_leading_term(const MatrixExact& l, const StabilityFn& r) {
  const Poly det = poly_matrix_det(m_matrix_series(l, r));
  if (det.is_zero()) throw Error(ErrorKind::IdenticallyZero, "det M(tau) vanishes identically");
  const long order = det.lowest_order();
  return {order, det.coeff(static_cast<std::size_t>(order)), det.degree()};
}

namespace {

void require_order_multiple_of_four(unsigned p) {
  if (p < 4 || p % 4 != 0) throw Error(ErrorKind::InvalidOrder, "p must be divisible by 4");
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational pow2(unsigned e) {
  mpz_class v(1);
  v <<= e;
  return Rational(v);
}

// prod_{i=from}^{N} 1/(m-i+1)!
Rational inverse_factorial_product(unsigned m, unsigned from, unsigned big_n) {
  Rational prod(1);
  for (unsigned i = from; i <= big_n; ++i) prod /= factorial(m - i + 1);
  return prod;
}

}  // namespace

namespace leading_coefficient {

Rational hankel_product_formula(unsigned n) {
  Rational num(1);
  Rational den(1);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) num *= Rational((j - i) * (j - i));
    for (unsigned j = 1; j <= n; ++j) den *= Rational(i + j - 1);
  }
  Rational out = num / den;
  return out;
}

Rational delta3(unsigned m) {
  const Rational mf = factorial(m);
  return factorial(2 * m + 1) / (mf * mf) * binomial(2 * m, m);
}

Rational mij(unsigned m, unsigned i, unsigned j) {
  const unsigned span = 2 * m + 3 - (i + j);
  return Rational(2) / (Rational(span) * factorial(m - i + 1) * factorial(m - j + 1));
}

Rational via_hankel_split(unsigned p) {
  require_order_multiple_of_four(p);
  const unsigned m = p / 2;
  const unsigned big_n = m + 1;
  const Rational delta2 = hankel_product_formula(big_n - 1);
  const Rational delta1 = delta2 / delta3(m);
  const Rational all = inverse_factorial_product(m, 1, big_n);
  const Rational tail = inverse_factorial_product(m, 2, big_n);
  const Rational first = pow2(big_n) * all * all * delta1;
  const Rational second = pow2(big_n) / factorial(2 * m + 1) * tail * tail * delta2;
  return first - second;
}

Rational via_leading_matrix(unsigned p) {
  require_order_multiple_of_four(p);
  const unsigned m = p / 2;
  const unsigned big_n = m + 1;
  MatrixExact a = zero_exact(big_n);
  for (unsigned i = 1; i <= big_n; ++i) {
    for (unsigned j = 1; j <= big_n; ++j) a(i - 1, j - 1) = Exact(mij(m, i, j));
  }
  a(0, 0) -= Exact(Rational(2) / factorial(2 * m + 1));
  return det_exact(a).re();
}

}  // namespace leading_coefficient

Rational closed_form_c(unsigned p) {
  require_order_multiple_of_four(p);
  const unsigned m = p / 2;
  const unsigned big_n = m + 1;
  const Rational prod = inverse_factorial_product(m, 1, big_n);
  return pow2(big_n) * prod * prod * leading_coefficient::hankel_product_formula(big_n) *
         (Rational(1) - binomial(p, m));
}

HpFloat stability_norm(const MatrixHp& l, const StabilityFn& r, const HpFloat& tau) {
  return spectral_norm(evaluate_at_matrix(r, l, tau));
}

namespace {

HpFloat excess_at(const MatrixHp& l, const StabilityFn& r, const HpFloat& tau, long bits) {
  HpFloat e = stability_norm(l, r, tau);
  e -= HpFloat(1, bits);
  return e;
}

}  // namespace

SweepResult norm_sweep(const MatrixExact& l, const StabilityFn& r, const HpFloat& epsilon,
                       std::size_t grid_points, const SweepOptions& opts) {
  const long bits = opts.precision_bits;
  if (bits < kSweepMinPrecisionBits) {
    throw Error(ErrorKind::PrecisionTooLow,
                "norm sweeps need at least " + std::to_string(kSweepMinPrecisionBits) +
                    " bits of precision, got " + std::to_string(bits));
  }
  if (epsilon.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  if (grid_points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");

  const MatrixHp lhp = MatrixHp::from_exact(l, bits);
  const HpFloat eps = epsilon.with_precision(bits);
  const HpFloat denom(static_cast<long>(grid_points - 1), bits);

  std::vector<HpFloat> taus;
  taus.reserve(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) {
    taus.push_back(eps * HpFloat(static_cast<long>(k), bits) / denom);
  }
  std::vector<HpFloat> norms(grid_points, HpFloat(bits));

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < grid_points; k += stride) norms[k] = stability_norm(lhp, r, taus[k]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, grid_points));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  const HpFloat one(1, bits);
  SweepResult res;
  res.epsilon = eps;
  res.grid_points = grid_points;
  res.precision_bits = bits;
  std::size_t best = 0;
  for (std::size_t k = 0; k < grid_points; ++k) {
    if (norms[k] > norms[best]) best = k;
    if (opts.keep_curve) res.curve.push_back({taus[k], norms[k], norms[k] - one});
  }
  res.max_excess = norms[best] - one;
  res.argmax_tau = taus[best];

  if (opts.refine) {
    // Golden-section search for the maximum inside the neighbouring cells.
    HpFloat lo = taus[best == 0 ? 0 : best - 1];
    HpFloat hi = taus[std::min(best + 1, grid_points - 1)];
    const HpFloat width_stop = ldexp(eps, -20);
    const HpFloat inv_phi = (sqrt(HpFloat(5, bits)) - one) / HpFloat(2, bits);
    HpFloat x1 = hi - (hi - lo) * inv_phi;
    HpFloat x2 = lo + (hi - lo) * inv_phi;
    HpFloat f1 = excess_at(lhp, r, x1, bits);
    HpFloat f2 = excess_at(lhp, r, x2, bits);
    auto consider = [&](const HpFloat& x, const HpFloat& f) {
      if (f > res.max_excess || (f == res.max_excess && x < res.argmax_tau)) {
        res.max_excess = f;
        res.argmax_tau = x;
      }
    };
    consider(x1, f1);
    consider(x2, f2);
    while (hi - lo > width_stop) {
      if (f1 >= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - (hi - lo) * inv_phi;
        f1 = excess_at(lhp, r, x1, bits);
        consider(x1, f1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + (hi - lo) * inv_phi;
        f2 = excess_at(lhp, r, x2, bits);
        consider(x2, f2);
      }
    }
  }
  return res;
}

const char* to_string(VerdictStatus s) {
  return s == VerdictStatus::CounterexampleFound ? "CounterexampleFound" : "NoViolationOnTestSet";
}

SeriesEvidence series_evidence(const MatrixExact& l, const StabilityFn& r) {
  SeriesEvidence ev;
  const TauPolyMatrix m = m_matrix_series(l, r);
  const Poly det = poly_matrix_det(m);
  if (!det.is_zero()) {
    const long order = det.lowest_order();
    ev.det = DetLeadingTerm{order, det.coeff(static_cast<std::size_t>(order)), det.degree()};
    ev.negative_determinant = sgn(ev.det->coeff.re()) < 0;
  }
  for (long k = 0; k <= max_degree(m); ++k) {
    MatrixExact block = coefficient_matrix(m, static_cast<std::size_t>(k));
    if (is_zero(block)) continue;
    ev.lowest_order = k;
    const Definiteness d = definiteness(block);
    ev.lowest_definiteness = d;
    ev.indefinite_leading_block = d == Definiteness::NegDef || d == Definiteness::NegSemiDef ||
                                  d == Definiteness::Indefinite;
    break;
  }
  return ev;
}

Rational default_epsilon(const MatrixExact& l) {
  Rational norm(1);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < l.dim(); ++j) row += abs(l(i, j).re()) + abs(l(i, j).im());
    norm = std::max(norm, row);
  }
  return Rational(1) / (4 * norm);
}

PerMatrixOutcome check_matrix(const MatrixExact& l, const StabilityFn& r, const VerdictOptions& opts,
                              std::optional<Witness>* witness) {
  const long bits = opts.precision_bits;
  PerMatrixOutcome out;
  out.evidence = series_evidence(l, r);
  const HpFloat guard = opts.guard ? *opts.guard : HpFloat::pow2(-(bits - 64), bits);
  const HpFloat eps0(opts.epsilon ? *opts.epsilon : default_epsilon(l), bits);
  SweepOptions sopts;
  sopts.precision_bits = bits;
  sopts.threads = opts.threads;

  std::optional<SweepResult> last;
  bool persisted = true;
  for (unsigned round = 0; round <= opts.rounds; ++round) {
    SweepResult res = norm_sweep(l, r, ldexp(eps0, -static_cast<long>(round)), opts.grid_points, sopts);
    out.round_excess.push_back(res.max_excess);
    if (!(res.max_excess > guard)) {
      persisted = false;
      break;
    }
    last = std::move(res);
  }
  out.violation = persisted;
  if (persisted && witness != nullptr) {
    *witness = Witness{0, l, last->argmax_tau, last->max_excess, eps0,
                       ldexp(eps0, -static_cast<long>(opts.rounds))};
  }
  return out;
}

StrongStabilityVerdict strong_stability_verdict(const StabilityFn& r,
                                                const std::vector<MatrixExact>& test_matrices,
                                                const VerdictOptions& opts) {
  StrongStabilityVerdict v;
  v.scheme = r;
  for (std::size_t i = 0; i < test_matrices.size(); ++i) {
    if (!is_semi_dissipative(test_matrices[i])) {
      throw Error(ErrorKind::NotSemiDissipative,
                  "test matrix " + std::to_string(i) + " is not semi-dissipative");
    }
  }
  for (std::size_t i = 0; i < test_matrices.size(); ++i) {
    std::optional<Witness> w;
    v.per_matrix.push_back(check_matrix(test_matrices[i], r, opts, &w));
    if (w && !v.witness) {
      w->matrix_index = i;
      v.witness = std::move(w);
      v.status = VerdictStatus::CounterexampleFound;
    }
  }
  return v;
}

MatrixExact rotation_generator() {
  MatrixExact l = zero_exact(2);
  l(0, 1) = Exact(-1);
  l(1, 0) = Exact(1);
  return l;
}

std::vector<MatrixExact> default_test_family() {
  return {staircase(2), staircase(3), staircase(4), rotation_generator()};
}

std::vector<MatrixExact> sample_lasm(unsigned m, std::size_t count, std::uint64_t seed,
                                     const LasmOptions& opts) {
  if (opts.max_dim < 2) throw Error(ErrorKind::InvalidArgument, "max_dim must be >= 2");
  std::mt19937_64 rng(seed);
  // Plain modular draws keep the stream identical across standard libraries.
  auto draw = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  auto small = [&] { return static_cast<long>(draw(0, 4)) - 2; };

  std::vector<MatrixExact> out;
  const std::size_t budget = count * opts.attempts_per_sample;
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    const std::size_t n = draw(2, opts.max_dim);
    const std::size_t min_rank = std::max<std::size_t>(1, (n + m) / (m + 1));
    const std::size_t rank = draw(min_rank, n);
    std::vector<std::vector<long>> b(n, std::vector<long>(rank));
    for (auto& row : b) {
      for (auto& x : row) x = small();
    }
    MatrixExact l = zero_exact(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long bb = 0;
        for (std::size_t k = 0; k < rank; ++k) bb += b[i][k] * b[j][k];
        l(i, j) = Exact(-bb);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const long s = small();
        l(i, j) += Exact(s);
        l(j, i) -= Exact(s);
      }
    }
    if (!is_asymptotically_stable(l)) continue;
    const auto idx = hc_index(l);
    if (!idx || *idx > m) continue;
    out.push_back(std::move(l));
  }
  if (out.size() < count) {
    throw Error(ErrorKind::SamplingExhausted,
                "found only " + std::to_string(out.size()) + " of " + std::to_string(count) +
                    " matrices with hc_index <= " + std::to_string(m));
  }
  return out;
}

LasmReport lasm_property_check(unsigned p, unsigned m, std::size_t samples, std::uint64_t seed,
                               const std::vector<MatrixExact>& extra, const LasmOptions& opts) {
  LasmReport rep;
  rep.p = p;
  rep.m = m;
  rep.seed = seed;
  rep.requested = samples;
  rep.index_condition_holds = 2 * m + 1 <= p;

  std::vector<MatrixExact> set = sample_lasm(m, samples, seed, opts);
  for (const auto& l : extra) {
    if (!is_semi_dissipative(l) || !is_asymptotically_stable(l) || hc_index(l).value_or(l.dim()) > m) {
      throw Error(ErrorKind::InvalidArgument,
                  "extra matrix is outside the class (semi-dissipative, asymptotically stable, hc_index <= m)");
    }
    set.push_back(l);
  }

  const StabilityFn r = taylor_scheme(p);
  VerdictOptions vopts;
  vopts.precision_bits = opts.precision_bits;
  vopts.grid_points = opts.grid_points;
  vopts.rounds = opts.rounds;
  vopts.guard = HpFloat::pow2(-opts.precision_bits / 2, opts.precision_bits);

  for (const auto& l : set) {
    LasmSample s;
    s.matrix = l;
    s.hc_index = hc_index(l).value_or(l.dim());
    std::optional<Witness> w;
    const PerMatrixOutcome outcome = check_matrix(l, r, vopts, &w);
    s.violation = outcome.violation;
    s.max_excess = outcome.round_excess.back();
    rep.violations += s.violation ? 1 : 0;
    rep.samples.push_back(std::move(s));
  }
  rep.tested = rep.samples.size();
  rep.matches_expectation = rep.index_condition_holds ? rep.violations == 0 : rep.violations > 0;
  return rep;
}

}  // namespace hypostab
