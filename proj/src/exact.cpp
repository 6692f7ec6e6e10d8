#include "hypostab/exact.hpp"

#include <cctype>

#include "hypostab/error.hpp"

namespace hypostab {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&](const char* why) {
    return Error(ErrorKind::Parse, "invalid rational '" + s + "': " + why);
  };
  if (s.empty()) throw bad("empty");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (s[0] == '+') s.erase(0, 1), start = 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw bad("more than one '/'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw bad("only integers and num/den are accepted");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw bad("missing digits");
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad("not a number");
  if (sgn(q.get_den()) == 0) throw bad("zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

Exact& Exact::operator*=(const Exact& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational r = re_ * rhs.re_ - im_ * rhs.im_;
  Rational i = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Exact& Exact::operator/=(const Exact& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  Rational d = rhs.norm2();
  *this *= rhs.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string Exact::to_string() const {
  if (is_real()) return hypostab::to_string(re_);
  std::string out = hypostab::to_string(re_);
  out += sgn(im_) < 0 ? "-" : "+";
  out += hypostab::to_string(abs(im_));
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.to_string(); }

}  // namespace hypostab
