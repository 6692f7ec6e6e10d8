#include "hypostab/matrix.hpp"

#include <algorithm>

namespace hypostab {

MatrixExact identity_exact(std::size_t n) { return identity_like(n, Exact{}, Exact(1)); }

MatrixExact zero_exact(std::size_t n) { return MatrixExact(n, Exact{}); }

MatrixExact adjoint(const MatrixExact& m) {
  const std::size_t n = m.dim();
  MatrixExact out(n, Exact{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(j, i).conj();
  }
  return out;
}

Exact trace(const MatrixExact& m) {
  Exact t;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

bool is_hermitian(const MatrixExact& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      if (!(m(i, j) == m(j, i).conj())) return false;
    }
  }
  return true;
}

bool is_real(const MatrixExact& m) {
  auto e = m.entries();
  return std::all_of(e.begin(), e.end(), [](const Exact& x) { return x.is_real(); });
}

bool is_zero(const MatrixExact& m) {
  auto e = m.entries();
  return std::all_of(e.begin(), e.end(), [](const Exact& x) { return x.is_zero(); });
}

MatrixExact make_exact(const std::vector<std::vector<Exact>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix must have dimension >= 1");
  MatrixExact out(n, Exact{});
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

MatrixExact power(const MatrixExact& m, unsigned k) {
  MatrixExact out = identity_exact(m.dim());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace hypostab
