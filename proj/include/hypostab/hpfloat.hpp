#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "hypostab/exact.hpp"

namespace hypostab {

inline constexpr long kDefaultPrecisionBits = 512;
inline constexpr long kSweepMinPrecisionBits = 256;

/// Binary floating-point value backed by MPFR. Every value owns its
/// precision; binary operations round to nearest at the larger precision
/// of the two operands, so no global precision state is involved.
class HpFloat {
 public:
  explicit HpFloat(long bits = kDefaultPrecisionBits);
  HpFloat(long value, long bits);
  HpFloat(const Rational& value, long bits);

  /// Accepts decimal ("0.304", "1e-3") or rational ("19/625") text.
  static HpFloat parse(std::string_view text, long bits);
  /// 2^exponent, exact.
  static HpFloat pow2(long exponent, long bits);

  HpFloat(const HpFloat& other);
  HpFloat(HpFloat&& other) noexcept;
  HpFloat& operator=(const HpFloat& other);
  HpFloat& operator=(HpFloat&& other) noexcept;
  ~HpFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded to a different precision.
  HpFloat with_precision(long bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log2 of the magnitude (exponent-aware, safe for tiny values).
  double log2_abs() const;

  /// Scientific notation with `significant` digits, e.g. "1.30e-06".
  std::string to_scientific(int significant) const;
  /// Enough decimal digits to round-trip the value at its precision.
  std::string to_decimal() const;

  HpFloat& operator+=(const HpFloat& rhs);
  HpFloat& operator-=(const HpFloat& rhs);
  HpFloat& operator*=(const HpFloat& rhs);
  HpFloat& operator/=(const HpFloat& rhs);
  HpFloat operator-() const;

  friend HpFloat operator+(HpFloat lhs, const HpFloat& rhs) { return lhs += rhs; }
  friend HpFloat operator-(HpFloat lhs, const HpFloat& rhs) { return lhs -= rhs; }
  friend HpFloat operator*(HpFloat lhs, const HpFloat& rhs) { return lhs *= rhs; }
  friend HpFloat operator/(HpFloat lhs, const HpFloat& rhs) { return lhs /= rhs; }

  friend bool operator==(const HpFloat& a, const HpFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const HpFloat& a, const HpFloat& b);

 private:
  mpfr_t v_;
};

HpFloat sqrt(const HpFloat& x);
HpFloat abs(const HpFloat& x);
HpFloat log(const HpFloat& x);
HpFloat exp(const HpFloat& x);
/// x * 2^e, exact.
HpFloat ldexp(const HpFloat& x, long e);
const HpFloat& max(const HpFloat& a, const HpFloat& b);

/// Complex pair at a common precision.
struct HpComplex {
  HpFloat re;
  HpFloat im;

  explicit HpComplex(long bits = kDefaultPrecisionBits) : re(bits), im(bits) {}
  HpComplex(HpFloat r, HpFloat i) : re(std::move(r)), im(std::move(i)) {}
  HpComplex(const Exact& value, long bits)
      : re(value.re(), bits), im(value.im(), bits) {}
};

}  // namespace hypostab
