#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace hypostab {

using Rational = mpq_class;

/// Parses "n", "n/d" or "-n/d". Decimal points and exponents are rejected:
/// exact inputs must stay exact.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Complex number with rational real and imaginary parts. gmpxx keeps
/// every mpq in canonical form, so equality is structural.
class Exact {
 public:
  Exact() = default;
  Exact(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Exact(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Exact(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Exact parse(std::string_view re, std::string_view im = "0") {
    return {parse_rational(re), parse_rational(im)};
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Exact conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Exact& operator+=(const Exact& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
  }
  Exact& operator-=(const Exact& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
  }
  Exact& operator*=(const Exact& rhs);
  Exact& operator/=(const Exact& rhs);
  Exact operator-() const { return {-re_, -im_}; }

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(Exact a, const Exact& b) { return a /= b; }
  friend bool operator==(const Exact& a, const Exact& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "a/b" for real values, "a/b+c/di" otherwise.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Exact& x);

}  // namespace hypostab
