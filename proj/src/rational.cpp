#include "colombeau/rational.hpp"

#include <cctype>

#include "colombeau/error.hpp"

namespace colombeau {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_rational_square(const Rational& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q))
    throw Error(ErrorKind::IrrationalLeadingCoefficient, "no rational square root of " + to_string(q));
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotAUnit, "division by a zero coefficient");
  if (is_real()) return Coefficient(1 / re_);
  const Rational n = norm_sq();
  return {re_ / n, -im_ / n};
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Coefficient& c) {
  if (c.is_real()) return to_string(c.re());
  if (sgn(c.re()) == 0) return "(" + to_string(c.im()) + "*I)";
  std::string s = "(" + to_string(c.re());
  s += sgn(c.im()) < 0 ? "-" : "+";
  s += to_string(abs(c.im())) + "*I)";
  return s;
}

}  // namespace colombeau
