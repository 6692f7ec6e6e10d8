#include "hypostab/poly.hpp"

#include <algorithm>

namespace hypostab {
namespace {
const Exact kZero{};
}

Poly::Poly(Exact constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Exact> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Exact c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Exact> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

long Poly::lowest_order() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return static_cast<long>(k);
  }
  return -1;
}

const Exact& Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : kZero; }

Poly Poly::conj() const {
  Poly out(*this);
  for (auto& c : out.c_) c = c.conj();
  return out;
}

Exact Poly::evaluate(const Exact& x) const {
  Exact acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::truncated(std::size_t k) const {
  if (c_.size() <= k + 1) return *this;
  return Poly(std::vector<Exact>(c_.begin(), c_.begin() + static_cast<long>(k) + 1));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Exact> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Exact& rhs) {
  if (rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= rhs;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = c_[k].is_real() ? c_[k].to_string() : "(" + c_[k].to_string() + ")";
    out += c;
    if (k == 1) out += "*" + var;
    if (k > 1) out += "*" + var + "^" + std::to_string(k);
  }
  return out;
}

TauPolyMatrix adjoint(const TauPolyMatrix& m) {
  const std::size_t n = m.dim();
  TauPolyMatrix out(n, Poly{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(j, i).conj();
  }
  return out;
}

long max_degree(const TauPolyMatrix& m) {
  long d = -1;
  for (const auto& p : m.entries()) d = std::max(d, p.degree());
  return d;
}

MatrixExact evaluate(const TauPolyMatrix& m, const Exact& x) {
  MatrixExact out(m.dim(), Exact{});
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).evaluate(x);
  }
  return out;
}

MatrixExact coefficient_matrix(const TauPolyMatrix& m, std::size_t k) {
  MatrixExact out(m.dim(), Exact{});
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).coeff(k);
  }
  return out;
}

}  // namespace hypostab
