#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypostab/error.hpp"
#include "hypostab/exact.hpp"

namespace hypostab {

/// Dense square matrix, row-major. Dimension zero is only used as an
/// empty placeholder; every public operation expects n >= 1.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, const T& fill) : n_(n), a_(n * n, fill) {}

  std::size_t dim() const { return n_; }
  bool empty() const { return n_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::span<T> entries() { return a_; }
  std::span<const T> entries() const { return a_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

template <class T>
SquareMatrix<T> identity_like(std::size_t n, const T& zero, const T& one) {
  SquareMatrix<T> out(n, zero);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
  return out;
}

template <class T>
SquareMatrix<T> operator+(SquareMatrix<T> a, const SquareMatrix<T>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  auto bs = b.entries();
  auto as = a.entries();
  for (std::size_t k = 0; k < as.size(); ++k) as[k] += bs[k];
  return a;
}

template <class T>
SquareMatrix<T> operator-(SquareMatrix<T> a, const SquareMatrix<T>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  auto bs = b.entries();
  auto as = a.entries();
  for (std::size_t k = 0; k < as.size(); ++k) as[k] -= bs[k];
  return a;
}

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  const std::size_t n = a.dim();
  if (n != b.dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  SquareMatrix<T> out(n, T{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class T, class S>
SquareMatrix<T> scaled(SquareMatrix<T> a, const S& factor) {
  for (auto& x : a.entries()) x *= factor;
  return a;
}

using MatrixExact = SquareMatrix<Exact>;

MatrixExact identity_exact(std::size_t n);
MatrixExact zero_exact(std::size_t n);
/// Conjugate transpose.
MatrixExact adjoint(const MatrixExact& m);
Exact trace(const MatrixExact& m);
bool is_hermitian(const MatrixExact& m);
bool is_real(const MatrixExact& m);
bool is_zero(const MatrixExact& m);
/// Builds a matrix from rows of rationals; rows must form a square.
MatrixExact make_exact(const std::vector<std::vector<Exact>>& rows);
MatrixExact power(const MatrixExact& m, unsigned k);

}  // namespace hypostab
