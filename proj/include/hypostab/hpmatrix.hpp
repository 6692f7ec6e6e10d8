#pragma once

#include <cstddef>
#include <vector>

#include "hypostab/hpfloat.hpp"
#include "hypostab/matrix.hpp"

namespace hypostab {

/// Real square matrix whose entries all share one precision. Kernels work
/// on the raw MPFR values with reused temporaries.
class HpMatrix {
 public:
  HpMatrix() = default;
  HpMatrix(std::size_t n, long bits);

  static HpMatrix identity(std::size_t n, long bits);

  std::size_t dim() const { return n_; }
  long precision() const { return bits_; }
  bool empty() const { return n_ == 0; }

  HpFloat& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const HpFloat& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  HpMatrix transposed() const;
  HpMatrix& operator+=(const HpMatrix& rhs);
  HpMatrix& operator-=(const HpMatrix& rhs);
  HpMatrix& operator*=(const HpFloat& s);
  /// Adds s to every diagonal entry.
  HpMatrix& add_diagonal(const HpFloat& s);

  friend HpMatrix operator*(const HpMatrix& a, const HpMatrix& b);
  friend bool operator==(const HpMatrix& a, const HpMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.a_ == b.a_;
  }

  /// Upper bound on the maximum absolute row sum, as a double.
  double norm_inf_bound() const;
  bool is_zero() const;

 private:
  std::size_t n_ = 0;
  long bits_ = kDefaultPrecisionBits;
  std::vector<HpFloat> a_;
};

/// Complex square matrix in planar storage. A real matrix keeps an empty
/// imaginary plane so products stay in real arithmetic.
class MatrixHp {
 public:
  MatrixHp() = default;
  explicit MatrixHp(HpMatrix re) : re_(std::move(re)) {}
  MatrixHp(HpMatrix re, HpMatrix im);

  static MatrixHp identity(std::size_t n, long bits);
  /// Rounds an exact matrix to `bits`.
  static MatrixHp from_exact(const MatrixExact& m, long bits);

  std::size_t dim() const { return re_.dim(); }
  long precision() const { return re_.precision(); }
  bool is_real() const { return im_.empty(); }

  const HpMatrix& re() const { return re_; }
  /// Empty when the matrix is real.
  const HpMatrix& im() const { return im_; }
  HpComplex at(std::size_t i, std::size_t j) const;

  MatrixHp adjoint() const;
  MatrixHp& operator+=(const MatrixHp& rhs);
  MatrixHp& operator-=(const MatrixHp& rhs);
  MatrixHp& operator*=(const HpFloat& s);
  MatrixHp& add_diagonal(const HpComplex& s);

  friend MatrixHp operator*(const MatrixHp& a, const MatrixHp& b);
  friend MatrixHp operator-(MatrixHp a, const MatrixHp& b) { return a -= b; }
  friend MatrixHp operator+(MatrixHp a, const MatrixHp& b) { return a += b; }
  friend bool operator==(const MatrixHp& a, const MatrixHp& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  double norm_inf_bound() const;

 private:
  void drop_zero_imag();

  HpMatrix re_;
  HpMatrix im_;
};

}  // namespace hypostab
