#include "hypostab/hpfloat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypostab/error.hpp"

namespace hypostab {
namespace {

mpfr_prec_t joint_precision(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

// Raises the precision of `x` (keeping its value) before it receives a
// result that should be rounded at `bits`.
void widen(mpfr_ptr x, mpfr_prec_t bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

HpFloat::HpFloat(long bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw Error(ErrorKind::InvalidArgument, "precision out of range");
  }
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

HpFloat::HpFloat(long value, long bits) : HpFloat(bits) {
  mpfr_set_si(v_, value, MPFR_RNDN);
}

HpFloat::HpFloat(const Rational& value, long bits) : HpFloat(bits) {
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

HpFloat HpFloat::parse(std::string_view text, long bits) {
  std::string s(text);
  if (s.find('/') != std::string::npos) return HpFloat(parse_rational(s), bits);
  HpFloat out(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(out.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == s.c_str() || *end != '\0' || !out.is_finite()) {
    throw Error(ErrorKind::Parse, "invalid number '" + s + "'");
  }
  return out;
}

HpFloat HpFloat::pow2(long exponent, long bits) {
  HpFloat out(1, bits);
  mpfr_mul_2si(out.v_, out.v_, exponent, MPFR_RNDN);
  return out;
}

HpFloat::HpFloat(const HpFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HpFloat::HpFloat(HpFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

HpFloat& HpFloat::operator=(const HpFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HpFloat& HpFloat::operator=(HpFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

HpFloat::~HpFloat() { mpfr_clear(v_); }

HpFloat HpFloat::with_precision(long bits) const {
  HpFloat out(bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

double HpFloat::log2_abs() const {
  if (is_zero()) return -INFINITY;
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

std::string HpFloat::to_scientific(int significant) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(significant - 1, 0), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string HpFloat::to_decimal() const {
  auto digits = static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(v_)));
  return to_scientific(digits);
}

HpFloat& HpFloat::operator+=(const HpFloat& rhs) {
  widen(v_, joint_precision(v_, rhs.v_));
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

HpFloat& HpFloat::operator-=(const HpFloat& rhs) {
  widen(v_, joint_precision(v_, rhs.v_));
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

HpFloat& HpFloat::operator*=(const HpFloat& rhs) {
  widen(v_, joint_precision(v_, rhs.v_));
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

HpFloat& HpFloat::operator/=(const HpFloat& rhs) {
  widen(v_, joint_precision(v_, rhs.v_));
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

HpFloat HpFloat::operator-() const {
  HpFloat out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const HpFloat& a, const HpFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

HpFloat sqrt(const HpFloat& x) {
  HpFloat out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HpFloat abs(const HpFloat& x) {
  HpFloat out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HpFloat log(const HpFloat& x) {
  HpFloat out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HpFloat exp(const HpFloat& x) {
  HpFloat out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HpFloat ldexp(const HpFloat& x, long e) {
  HpFloat out(x.precision());
  mpfr_mul_2si(out.raw(), x.raw(), e, MPFR_RNDN);
  return out;
}

const HpFloat& max(const HpFloat& a, const HpFloat& b) { return (b > a) ? b : a; }

}  // namespace hypostab
