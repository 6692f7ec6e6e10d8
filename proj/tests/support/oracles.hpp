#pragma once

// Reference implementations used only by the tests. None of them share code
// paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <mpfr.h>

#include "hypostab/hpfloat.hpp"
#include "hypostab/matrix.hpp"
#include "hypostab/poly.hpp"

namespace oracle {

using hypostab::Exact;
using hypostab::HpFloat;
using hypostab::MatrixExact;
using hypostab::Poly;
using hypostab::Rational;

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

// Sum over all permutations.
template <class T>
T leibniz_det(const hypostab::SquareMatrix<T>& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total{};
  do {
    T term{1L};
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (permutation_sign(perm) < 0) term = T{} - term;
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det(x I - M) for 3 x 3 via trace, principal minors and cofactor determinant.
inline std::vector<Exact> char_poly_3x3(const MatrixExact& m) {
  auto minor2 = [&](std::size_t a, std::size_t b) { return m(a, a) * m(b, b) - m(a, b) * m(b, a); };
  const Exact tr = m(0, 0) + m(1, 1) + m(2, 2);
  const Exact sum_minors = minor2(0, 1) + minor2(0, 2) + minor2(1, 2);
  const Exact det = m(0, 0) * minor2(1, 2) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                    m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return {-det, sum_minors, -tr, Exact(1)};
}

// Gaussian elimination with exact pivots.
inline Rational gauss_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

struct Cx {
  HpFloat re, im;
};

// Largest singular value by power iteration on B = M* M. B is squared
// repeatedly (with renormalisation) so the dominant direction separates
// quickly; the Rayleigh quotient with the original B gives lambda_max.
inline HpFloat power_iteration_norm(const MatrixExact& m, long bits, int squarings = 24) {
  const std::size_t n = m.dim();
  using CMat = std::vector<std::vector<Cx>>;
  auto zero = [&] { return CMat(n, std::vector<Cx>(n, Cx{HpFloat(bits), HpFloat(bits)})); };
  auto mul = [&](const CMat& a, const CMat& b) {
    CMat out = zero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        HpFloat re(bits), im(bits);
        for (std::size_t k = 0; k < n; ++k) {
          re += a[i][k].re * b[k][j].re - a[i][k].im * b[k][j].im;
          im += a[i][k].re * b[k][j].im + a[i][k].im * b[k][j].re;
        }
        out[i][j] = Cx{re, im};
      }
    }
    return out;
  };
  CMat a = zero();
  CMat ah = zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Cx{HpFloat(m(i, j).re(), bits), HpFloat(m(i, j).im(), bits)};
      ah[j][i] = Cx{a[i][j].re, -a[i][j].im};
    }
  }
  const CMat b = mul(ah, a);
  CMat p = b;
  for (int s = 0; s < squarings; ++s) {
    HpFloat scale(bits);
    for (const auto& row : p) {
      for (const auto& e : row) scale = std::max(scale, hypostab::max(abs(e.re), abs(e.im)));
    }
    if (scale.is_zero()) return HpFloat(bits);
    for (auto& row : p) {
      for (auto& e : row) {
        e.re /= scale;
        e.im /= scale;
      }
    }
    p = mul(p, p);
  }
  // Column of P with the largest mass spans the dominant eigenvector.
  std::size_t best = 0;
  HpFloat best_mass(bits);
  for (std::size_t j = 0; j < n; ++j) {
    HpFloat mass(bits);
    for (std::size_t i = 0; i < n; ++i) mass += p[i][j].re * p[i][j].re + p[i][j].im * p[i][j].im;
    if (mass > best_mass) {
      best_mass = mass;
      best = j;
    }
  }
  if (best_mass.is_zero()) return HpFloat(bits);
  HpFloat num(bits), den(bits);
  for (std::size_t i = 0; i < n; ++i) {
    HpFloat bre(bits), bim(bits);
    for (std::size_t k = 0; k < n; ++k) {
      bre += b[i][k].re * p[k][best].re - b[i][k].im * p[k][best].im;
      bim += b[i][k].re * p[k][best].im + b[i][k].im * p[k][best].re;
    }
    // conj(v_i) * (B v)_i, real part
    num += p[i][best].re * bre + p[i][best].im * bim;
    den += p[i][best].re * p[i][best].re + p[i][best].im * p[i][best].im;
  }
  return sqrt(num / den);
}

inline Rational small_rational(std::mt19937_64& rng, int span = 4, int max_den = 3) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = 1 + static_cast<long>(rng() % max_den);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline MatrixExact random_matrix(std::mt19937_64& rng, std::size_t n, bool complex) {
  MatrixExact m(n, Exact(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Exact(small_rational(rng), complex ? small_rational(rng) : Rational(0));
    }
  }
  return m;
}

// -B B* + (S - S*) is semi-dissipative by construction.
inline MatrixExact random_semi_dissipative(std::mt19937_64& rng, std::size_t n, bool complex) {
  const MatrixExact b = random_matrix(rng, n, complex);
  const MatrixExact s = random_matrix(rng, n, complex);
  return hypostab::zero_exact(n) - b * hypostab::adjoint(b) + (s - hypostab::adjoint(s));
}

inline hypostab::SquareMatrix<Poly> random_poly_matrix(std::mt19937_64& rng, std::size_t n) {
  hypostab::SquareMatrix<Poly> m(n, Poly());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t deg = rng() % 4;
      std::vector<Exact> c;
      for (std::size_t k = 0; k <= deg; ++k) {
        c.emplace_back(small_rational(rng, 3, 2), (rng() % 4 == 0) ? Rational(1) : Rational(0));
      }
      m(i, j) = Poly(c);
    }
  }
  return m;
}

inline HpFloat mpfr_cos(const HpFloat& x) {
  HpFloat out(x.precision());
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

inline HpFloat mpfr_sin(const HpFloat& x) {
  HpFloat out(x.precision());
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace oracle
