#include "hypostab/hypo.hpp"

#include <algorithm>

#include "hypostab/error.hpp"

namespace hypostab {

Split split(const MatrixExact& l) {
  const MatrixExact la = adjoint(l);
  const Exact half(Rational(1, 2));
  return {scaled(l + la, half), scaled(l - la, half)};
}

bool is_semi_dissipative(const MatrixExact& l) {
  return is_nonpositive(definiteness(split(l).hermitian));
}

std::vector<MatrixExact> tm_chain(const MatrixExact& l, std::size_t max_m) {
  const auto [lh, ls] = split(l);
  const MatrixExact ls_adj = adjoint(ls);
  std::vector<MatrixExact> chain;
  chain.reserve(max_m + 1);
  MatrixExact left = identity_exact(l.dim());   // L_S^j
  MatrixExact right = identity_exact(l.dim());  // (L_S^*)^j
  MatrixExact sum = lh;
  chain.push_back(sum);
  for (std::size_t m = 1; m <= max_m; ++m) {
    left = left * ls;
    right = ls_adj * right;
    sum = sum + left * lh * right;
    chain.push_back(sum);
  }
  return chain;
}

namespace {

void require_semi_dissipative(const MatrixExact& l) {
  if (!is_semi_dissipative(l)) {
    throw Error(ErrorKind::NotSemiDissipative,
                "matrix is not semi-dissipative (its Hermitian part is not negative semi-definite)");
  }
}

}  // namespace

std::optional<std::size_t> hc_index(const MatrixExact& l) {
  require_semi_dissipative(l);
  const auto chain = tm_chain(l, l.dim() - 1);
  for (std::size_t m = 0; m < chain.size(); ++m) {
    if (definiteness(chain[m]) == Definiteness::NegDef) return m;
  }
  return std::nullopt;
}

HcBounds hc_bounds(const MatrixExact& l) {
  require_semi_dissipative(l);
  const std::size_t rank = rank_exact(split(l).hermitian);
  if (rank == 0) {
    throw Error(ErrorKind::ZeroDissipativePart,
                "Hermitian part is zero: index bounds are undefined");
  }
  const long n = static_cast<long>(l.dim());
  const long r = static_cast<long>(rank);
  Rational lower(n - r, r);
  lower.canonicalize();
  return {lower, n - r};
}

MatrixExact staircase(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "staircase dimension must be >= 1");
  MatrixExact l = zero_exact(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    l(i + 1, i) = Exact(1);
    l(i, i + 1) = Exact(-1);
  }
  l(n - 1, n - 1) = Exact(-1);
  return l;
}

StabilityCheck routh_hurwitz(const Poly& p) {
  const long d = p.degree();
  if (d < 0) return {false, true};
  for (const auto& c : p.coeffs()) {
    if (!c.is_real()) throw Error(ErrorKind::InvalidArgument, "Routh-Hurwitz needs real coefficients");
  }
  if (d == 0) return {true, false};
  const int lead_sign = sgn(p.coeff(static_cast<std::size_t>(d)).re());
  const std::size_t width = static_cast<std::size_t>(d) / 2 + 1;
  auto coeff = [&](long k) -> Rational {
    if (k < 0) return Rational(0);
    Rational c = p.coeff(static_cast<std::size_t>(k)).re();
    return lead_sign < 0 ? Rational(-c) : c;
  };
  std::vector<Rational> prev(width), cur(width);
  for (std::size_t j = 0; j < width; ++j) {
    prev[j] = coeff(d - 2 * static_cast<long>(j));
    cur[j] = coeff(d - 1 - 2 * static_cast<long>(j));
  }
  // prev[0] is the (positive) leading coefficient.
  for (long row = 1; row <= d; ++row) {
    if (std::all_of(cur.begin(), cur.end(), [](const Rational& x) { return sgn(x) == 0; })) {
      return {false, true};
    }
    if (sgn(cur[0]) <= 0) return {false, false};
    std::vector<Rational> next(width);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {true, false};
}

StabilityCheck asymptotic_stability(const MatrixExact& l) {
  Poly cp = char_poly(l);
  if (!is_real(l)) cp = cp * cp.conj();
  return routh_hurwitz(cp);
}

bool is_asymptotically_stable(const MatrixExact& l) { return asymptotic_stability(l).stable; }

namespace {

// Exact square root of a nonnegative rational, when one exists.
std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<bool> kalman_rank_check(const MatrixExact& l) {
  const std::size_t n = l.dim();
  const auto [lh, ls] = split(l);
  std::vector<std::size_t> support;
  std::vector<Rational> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !lh(i, j).is_zero()) return std::nullopt;
    }
    if (!lh(i, i).is_real()) return std::nullopt;
    auto r = exact_sqrt(-lh(i, i).re());
    if (!r) return std::nullopt;
    if (sgn(*r) != 0) {
      support.push_back(i);
      roots.push_back(*r);
    }
  }
  // Columns of B = sqrt(-L_H) restricted to its support, then L_S^k B.
  std::vector<std::vector<Exact>> cols;
  for (std::size_t c = 0; c < support.size(); ++c) {
    std::vector<Exact> v(n);
    v[support[c]] = Exact(roots[c]);
    for (std::size_t k = 0; k < n; ++k) {
      cols.push_back(v);
      std::vector<Exact> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) next[i] += ls(i, j) * v[j];
      }
      v = std::move(next);
    }
  }
  // Row rank of the stacked columns equals the rank of the Kalman matrix.
  return rank_exact(cols) == n;
}

HcReport hc_report(const MatrixExact& l) {
  require_semi_dissipative(l);
  HcReport r;
  r.n = l.dim();
  r.semi_dissipative = true;
  r.rank_lh = rank_exact(split(l).hermitian);
  const auto chain = tm_chain(l, r.n - 1);
  for (std::size_t m = 0; m < chain.size(); ++m) {
    const Definiteness d = definiteness(chain[m]);
    r.tm_chain.push_back({m, d});
    if (d == Definiteness::NegDef && !r.hc_index) r.hc_index = m;
  }
  if (r.rank_lh > 0) {
    const auto b = hc_bounds(l);
    r.lower_bound = b.lower;
    r.upper_bound = b.upper;
  } else {
    r.conservative = true;
  }
  const auto st = asymptotic_stability(l);
  r.asymptotically_stable = st.stable;
  r.marginal = st.marginal;
  r.kalman = kalman_rank_check(l);
  return r;
}

}  // namespace hypostab
