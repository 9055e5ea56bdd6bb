#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace colombeau {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (optional leading '-'); throws Error on malformed text.
Rational parse_rational(std::string_view text);

// "3/2", "-1", "0".
std::string to_string(const Rational& q);

Integer ceil(const Rational& q);

// Rational numbers with a perfect-square numerator and denominator.
bool is_rational_square(const Rational& q);
Rational rational_sqrt(const Rational& q);

/// Scalar coefficient of a generalized number: a Gaussian rational re + im*I.
/// Real-field values keep im == 0.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  Coefficient(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Coefficient(long n) : re_(n) {}  // NOLINT(implicit)

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

  Coefficient conj() const { return {re_, -im_}; }
  // |c|^2 = re^2 + im^2.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }
  Coefficient operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const Coefficient& c);

}  // namespace colombeau
