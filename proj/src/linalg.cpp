#include "hypostab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "hypostab/error.hpp"

namespace hypostab {

Poly char_poly(const MatrixExact& a) {
  const std::size_t n = a.dim();
  std::vector<Exact> c(n + 1);
  c[n] = Exact(1);
  MatrixExact mk = zero_exact(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    MatrixExact amk = a * mk;
    c[n - k] = -trace(amk) / Exact(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::NegDef: return "NegDef";
    case Definiteness::NegSemiDef: return "NegSemiDef";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::PosSemiDef: return "PosSemiDef";
    case Definiteness::PosDef: return "PosDef";
    case Definiteness::Zero: return "Zero";
  }
  return "?";
}

bool is_nonpositive(Definiteness d) {
  return d == Definiteness::NegDef || d == Definiteness::NegSemiDef || d == Definiteness::Zero;
}

Definiteness definiteness(const MatrixExact& h) {
  if (!is_hermitian(h)) throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian");
  if (is_zero(h)) return Definiteness::Zero;
  const std::size_t n = h.dim();
  const Poly cp = char_poly(h);
  // det(lambda I - H) = prod (lambda - lambda_i) with real lambda_i: all
  // roots <= 0 iff every coefficient is >= 0 (strictly for < 0).
  auto classify = [&](bool flip) {
    bool all_pos = true;
    bool all_nonneg = true;
    for (std::size_t k = 0; k < n; ++k) {
      int s = sgn(cp.coeff(k).re());
      if (flip && (n - k) % 2 == 1) s = -s;
      all_pos = all_pos && s > 0;
      all_nonneg = all_nonneg && s >= 0;
    }
    return std::pair{all_pos, all_nonneg};
  };
  auto [neg_def, neg_semi] = classify(false);
  if (neg_def) return Definiteness::NegDef;
  if (neg_semi) return Definiteness::NegSemiDef;
  auto [pos_def, pos_semi] = classify(true);
  if (pos_def) return Definiteness::PosDef;
  if (pos_semi) return Definiteness::PosSemiDef;
  return Definiteness::Indefinite;
}

std::size_t rank_exact(const std::vector<std::vector<Exact>>& input) {
  auto rows = input;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Exact f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const MatrixExact& m) {
  std::vector<std::vector<Exact>> rows(m.dim(), std::vector<Exact>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  }
  return rank_exact(rows);
}

std::vector<HpFloat> symmetric_eigenvalues(HpMatrix a, const JacobiOptions& opts) {
  const std::size_t n = a.dim();
  const long bits = a.precision();
  if (n == 1) return {a(0, 0)};

  // Scratch values reused across rotations.
  HpFloat off(bits), fro(bits), thresh(bits), theta(bits), t(bits), c(bits), s(bits), tau(bits),
      g(bits), h(bits), tmp(bits), tiny(bits);

  auto sum_squares = [&](bool off_only, HpFloat& out) {
    mpfr_set_zero(out.raw(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (off_only && i == j) continue;
        mpfr_fma(out.raw(), a(i, j).raw(), a(i, j).raw(), out.raw(), MPFR_RNDN);
      }
    }
  };

  sum_squares(false, fro);
  // Converged once sqrt(off) <= 2^-bits * ||A||_F.
  mpfr_mul_2si(thresh.raw(), fro.raw(), -2 * bits, MPFR_RNDN);
  // Elements below 2^-(bits+8) ||A||_F are dropped rather than rotated.
  mpfr_sqrt(tiny.raw(), fro.raw(), MPFR_RNDN);
  mpfr_mul_2si(tiny.raw(), tiny.raw(), -(bits + 8), MPFR_RNDN);

  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    sum_squares(true, off);
    if (off <= thresh) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        mpfr_ptr apq = a(p, q).raw();
        if (mpfr_zero_p(apq)) continue;
        if (mpfr_cmpabs(apq, tiny.raw()) <= 0) {
          mpfr_set_zero(apq, 1);
          mpfr_set_zero(a(q, p).raw(), 1);
          continue;
        }
        // theta = (a_qq - a_pp) / (2 a_pq); t = sgn(theta)/(|theta| + sqrt(theta^2 + 1))
        mpfr_sub(theta.raw(), a(q, q).raw(), a(p, p).raw(), MPFR_RNDN);
        mpfr_div(theta.raw(), theta.raw(), apq, MPFR_RNDN);
        mpfr_div_2ui(theta.raw(), theta.raw(), 1, MPFR_RNDN);
        mpfr_sqr(tmp.raw(), theta.raw(), MPFR_RNDN);
        mpfr_add_ui(tmp.raw(), tmp.raw(), 1, MPFR_RNDN);
        mpfr_sqrt(tmp.raw(), tmp.raw(), MPFR_RNDN);
        mpfr_abs(t.raw(), theta.raw(), MPFR_RNDN);
        mpfr_add(t.raw(), t.raw(), tmp.raw(), MPFR_RNDN);
        mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
        if (mpfr_sgn(theta.raw()) < 0) mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
        // c = 1/sqrt(t^2+1), s = t c, tau = s / (1 + c)
        mpfr_sqr(c.raw(), t.raw(), MPFR_RNDN);
        mpfr_add_ui(c.raw(), c.raw(), 1, MPFR_RNDN);
        mpfr_rec_sqrt(c.raw(), c.raw(), MPFR_RNDN);
        mpfr_mul(s.raw(), t.raw(), c.raw(), MPFR_RNDN);
        mpfr_add_ui(tau.raw(), c.raw(), 1, MPFR_RNDN);
        mpfr_div(tau.raw(), s.raw(), tau.raw(), MPFR_RNDN);

        mpfr_mul(tmp.raw(), t.raw(), apq, MPFR_RNDN);
        mpfr_sub(a(p, p).raw(), a(p, p).raw(), tmp.raw(), MPFR_RNDN);
        mpfr_add(a(q, q).raw(), a(q, q).raw(), tmp.raw(), MPFR_RNDN);
        mpfr_set_zero(apq, 1);
        mpfr_set_zero(a(q, p).raw(), 1);

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          mpfr_set(g.raw(), a(r, p).raw(), MPFR_RNDN);
          mpfr_set(h.raw(), a(r, q).raw(), MPFR_RNDN);
          // a_rp = g - s (h + g tau)
          mpfr_fma(tmp.raw(), g.raw(), tau.raw(), h.raw(), MPFR_RNDN);
          mpfr_mul(tmp.raw(), tmp.raw(), s.raw(), MPFR_RNDN);
          mpfr_sub(a(r, p).raw(), g.raw(), tmp.raw(), MPFR_RNDN);
          // a_rq = h + s (g - h tau)
          mpfr_mul(tmp.raw(), h.raw(), tau.raw(), MPFR_RNDN);
          mpfr_sub(tmp.raw(), g.raw(), tmp.raw(), MPFR_RNDN);
          mpfr_mul(tmp.raw(), tmp.raw(), s.raw(), MPFR_RNDN);
          mpfr_add(a(r, q).raw(), h.raw(), tmp.raw(), MPFR_RNDN);
          mpfr_set(a(p, r).raw(), a(r, p).raw(), MPFR_RNDN);
          mpfr_set(a(q, r).raw(), a(r, q).raw(), MPFR_RNDN);
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorKind::NonConvergence,
                "Jacobi iteration did not converge; check the precision setting");
  }
  std::vector<HpFloat> eig;
  eig.reserve(n);
  for (std::size_t i = 0; i < n; ++i) eig.push_back(a(i, i));
  std::sort(eig.begin(), eig.end(), [](const HpFloat& x, const HpFloat& y) { return x < y; });
  return eig;
}

std::vector<HpFloat> hermitian_eigenvalues(const MatrixHp& h, const JacobiOptions& opts) {
  if (h.is_real()) return symmetric_eigenvalues(h.re(), opts);
  const std::size_t n = h.dim();
  HpMatrix big(2 * n, h.precision());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = h.re()(i, j);
      big(i + n, j + n) = h.re()(i, j);
      big(i + n, j) = h.im()(i, j);
      big(i, j + n) = -h.im()(i, j);
    }
  }
  auto doubled = symmetric_eigenvalues(std::move(big), opts);
  std::vector<HpFloat> eig;
  eig.reserve(n);
  for (std::size_t k = 0; k < n; ++k) eig.push_back(std::move(doubled[2 * k]));
  return eig;
}

HpFloat spectral_norm(const MatrixHp& m, const JacobiOptions& opts) {
  MatrixHp gram = m.adjoint() * m;
  auto eig = hermitian_eigenvalues(gram, opts);
  HpFloat top = eig.back();
  if (top.sign() < 0) top = HpFloat(m.precision());
  return sqrt(top);
}

namespace {

MatrixHp rounded(const MatrixHp& a, long bits) {
  const std::size_t n = a.dim();
  HpMatrix re(n, bits);
  HpMatrix im;
  if (!a.is_real()) im = HpMatrix(n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpfr_set(re(i, j).raw(), a.re()(i, j).raw(), MPFR_RNDN);
      if (!a.is_real()) mpfr_set(im(i, j).raw(), a.im()(i, j).raw(), MPFR_RNDN);
    }
  }
  return {std::move(re), std::move(im)};
}

constexpr long kExpGuardBits = 32;

}  // namespace

MatrixHp matrix_exp(const MatrixHp& a, long bits) {
  const std::size_t n = a.dim();
  const double nu = a.norm_inf_bound();
  long squarings = 0;
  if (nu > 0.5) squarings = static_cast<long>(std::ceil(std::log2(nu / 0.5)));
  const long work = bits + kExpGuardBits + squarings;

  MatrixHp b = rounded(a, work);
  if (squarings > 0) b *= HpFloat::pow2(-squarings, work);
  const double beta = nu * std::ldexp(1.0, static_cast<int>(-squarings));

  // Smallest K with tail bound 2 beta^{K+1}/(K+1)! <= 2^-work.
  long terms = 0;
  if (beta > 0) {
    double log2_tail = 1.0 + std::log2(beta);  // K = 0
    for (terms = 0; log2_tail > -static_cast<double>(work); ++terms) {
      log2_tail += std::log2(beta) - std::log2(static_cast<double>(terms + 2));
    }
  }

  MatrixHp sum = MatrixHp::identity(n, work);
  MatrixHp term = MatrixHp::identity(n, work);
  for (long k = 1; k <= terms; ++k) {
    term = term * b;
    term *= HpFloat(Rational(1, k), work);
    sum += term;
  }
  for (long k = 0; k < squarings; ++k) sum = sum * sum;
  return rounded(sum, bits);
}

MatrixHp matrix_exp(const MatrixExact& l, const HpFloat& t, long bits) {
  if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "matrix_exp requires t >= 0");
  const long work = bits + kExpGuardBits;
  MatrixHp a = MatrixHp::from_exact(l, work);
  a *= t.with_precision(work);
  return matrix_exp(a, bits);
}

namespace {

template <class T>
T laplace_det(const SquareMatrix<T>& m, const T& one) {
  const std::size_t n = m.dim();
  if (n == 0) return one;
  if (n > 20) throw Error(ErrorKind::InvalidArgument, "determinant expansion limited to n <= 20");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // minors[S] = det(rows 0..|S|-1, columns S), filled in order of |S|.
  std::vector<T> minors(std::size_t{full} + 1);
  minors[0] = one;
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t s = 1; s <= full; ++s) by_size[std::popcount(s)].push_back(s);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = k - 1;
    for (std::uint32_t s : by_size[k]) {
      T acc{};
      std::size_t pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(s & (std::uint32_t{1} << j))) continue;
        const T& prev = minors[s & ~(std::uint32_t{1} << j)];
        if (!m(row, j).is_zero() && !prev.is_zero()) {
          T term = m(row, j) * prev;
          if ((row + pos) % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
        ++pos;
      }
      minors[s] = std::move(acc);
    }
    // Minors of size k-1 are no longer needed.
    if (k >= 2) {
      for (std::uint32_t s : by_size[k - 1]) minors[s] = T{};
    }
  }
  return minors[full];
}

}  // namespace

Poly poly_matrix_det(const TauPolyMatrix& p) { return laplace_det(p, Poly(Exact(1))); }

Exact det_exact(const MatrixExact& m) { return laplace_det(m, Exact(1)); }

}  // namespace hypostab
