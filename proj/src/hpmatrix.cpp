#include "hypostab/hpmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "hypostab/error.hpp"

namespace hypostab {

HpMatrix::HpMatrix(std::size_t n, long bits) : n_(n), bits_(bits), a_(n * n, HpFloat(bits)) {}

HpMatrix HpMatrix::identity(std::size_t n, long bits) {
  HpMatrix out(n, bits);
  for (std::size_t i = 0; i < n; ++i) mpfr_set_ui(out(i, i).raw(), 1, MPFR_RNDN);
  return out;
}

HpMatrix HpMatrix::transposed() const {
  HpMatrix out(n_, bits_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) mpfr_set(out(j, i).raw(), (*this)(i, j).raw(), MPFR_RNDN);
  }
  return out;
}

HpMatrix& HpMatrix::operator+=(const HpMatrix& rhs) {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) mpfr_add(a_[k].raw(), a_[k].raw(), rhs.a_[k].raw(), MPFR_RNDN);
  return *this;
}

HpMatrix& HpMatrix::operator-=(const HpMatrix& rhs) {
  if (n_ != rhs.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) mpfr_sub(a_[k].raw(), a_[k].raw(), rhs.a_[k].raw(), MPFR_RNDN);
  return *this;
}

HpMatrix& HpMatrix::operator*=(const HpFloat& s) {
  for (auto& x : a_) mpfr_mul(x.raw(), x.raw(), s.raw(), MPFR_RNDN);
  return *this;
}

HpMatrix& HpMatrix::add_diagonal(const HpFloat& s) {
  for (std::size_t i = 0; i < n_; ++i) mpfr_add((*this)(i, i).raw(), (*this)(i, i).raw(), s.raw(), MPFR_RNDN);
  return *this;
}

HpMatrix operator*(const HpMatrix& a, const HpMatrix& b) {
  const std::size_t n = a.n_;
  if (n != b.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  HpMatrix out(n, std::max(a.bits_, b.bits_));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpfr_ptr acc = out(i, j).raw();
      for (std::size_t k = 0; k < n; ++k) {
        mpfr_fma(acc, a(i, k).raw(), b(k, j).raw(), acc, MPFR_RNDN);
      }
    }
  }
  return out;
}

double HpMatrix::norm_inf_bound() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n_; ++j) row += std::fabs(mpfr_get_d((*this)(i, j).raw(), MPFR_RNDA));
    best = std::max(best, row);
  }
  // Absorb the double-precision summation error.
  return best * (1.0 + 1e-12);
}

bool HpMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const HpFloat& x) { return x.is_zero(); });
}

MatrixHp::MatrixHp(HpMatrix re, HpMatrix im) : re_(std::move(re)), im_(std::move(im)) {
  if (!im_.empty() && im_.dim() != re_.dim()) {
    throw Error(ErrorKind::InvalidArgument, "real/imaginary planes differ in size");
  }
  drop_zero_imag();
}

void MatrixHp::drop_zero_imag() {
  if (!im_.empty() && im_.is_zero()) im_ = HpMatrix();
}

MatrixHp MatrixHp::identity(std::size_t n, long bits) { return MatrixHp(HpMatrix::identity(n, bits)); }

MatrixHp MatrixHp::from_exact(const MatrixExact& m, long bits) {
  const std::size_t n = m.dim();
  HpMatrix re(n, bits);
  HpMatrix im;
  if (!hypostab::is_real(m)) im = HpMatrix(n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpfr_set_q(re(i, j).raw(), m(i, j).re().get_mpq_t(), MPFR_RNDN);
      if (!im.empty()) mpfr_set_q(im(i, j).raw(), m(i, j).im().get_mpq_t(), MPFR_RNDN);
    }
  }
  return {std::move(re), std::move(im)};
}

HpComplex MatrixHp::at(std::size_t i, std::size_t j) const {
  return {re_(i, j), is_real() ? HpFloat(precision()) : im_(i, j)};
}

MatrixHp MatrixHp::adjoint() const {
  if (is_real()) return MatrixHp(re_.transposed());
  HpMatrix im = im_.transposed();
  im *= HpFloat(-1, precision());
  return {re_.transposed(), std::move(im)};
}

MatrixHp& MatrixHp::operator+=(const MatrixHp& rhs) {
  re_ += rhs.re_;
  if (!rhs.is_real()) {
    if (is_real()) im_ = HpMatrix(dim(), precision());
    im_ += rhs.im_;
    drop_zero_imag();
  }
  return *this;
}

MatrixHp& MatrixHp::operator-=(const MatrixHp& rhs) {
  re_ -= rhs.re_;
  if (!rhs.is_real()) {
    if (is_real()) im_ = HpMatrix(dim(), precision());
    im_ -= rhs.im_;
    drop_zero_imag();
  }
  return *this;
}

MatrixHp& MatrixHp::operator*=(const HpFloat& s) {
  re_ *= s;
  if (!is_real()) im_ *= s;
  return *this;
}

MatrixHp& MatrixHp::add_diagonal(const HpComplex& s) {
  re_.add_diagonal(s.re);
  if (!s.im.is_zero()) {
    if (is_real()) im_ = HpMatrix(dim(), precision());
    im_.add_diagonal(s.im);
    drop_zero_imag();
  }
  return *this;
}

MatrixHp operator*(const MatrixHp& a, const MatrixHp& b) {
  if (a.is_real() && b.is_real()) return MatrixHp(a.re_ * b.re_);
  if (a.is_real()) return {a.re_ * b.re_, a.re_ * b.im_};
  if (b.is_real()) return {a.re_ * b.re_, a.im_ * b.re_};
  HpMatrix re = a.re_ * b.re_;
  re -= a.im_ * b.im_;
  HpMatrix im = a.re_ * b.im_;
  im += a.im_ * b.re_;
  return {std::move(re), std::move(im)};
}

double MatrixHp::norm_inf_bound() const {
  if (is_real()) return re_.norm_inf_bound();
  // |a + ib| <= |a| + |b| row by row.
  double best = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim(); ++j) {
      row += std::fabs(mpfr_get_d(re_(i, j).raw(), MPFR_RNDA));
      row += std::fabs(mpfr_get_d(im_(i, j).raw(), MPFR_RNDA));
    }
    best = std::max(best, row);
  }
  return best * (1.0 + 1e-12);
}

}  // namespace hypostab
