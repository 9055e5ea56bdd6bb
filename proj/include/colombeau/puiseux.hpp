#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colombeau/rational.hpp"

namespace colombeau {

/// A rational or +infinity (std::nullopt).
using ExtRational = std::optional<Rational>;

inline bool ext_less(const ExtRational& a, const ExtRational& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}
inline ExtRational ext_min(const ExtRational& a, const ExtRational& b) { return ext_less(b, a) ? b : a; }
inline ExtRational ext_add(const ExtRational& a, const ExtRational& b) {
  if (!a || !b) return std::nullopt;
  return Rational(*a + *b);
}
std::string to_string(const ExtRational& q);  // "inf" for +infinity

struct Term {
  Rational exponent;
  Coefficient coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite sum of c_i eps^{q_i} with strictly increasing rational exponents,
/// optionally truncated: with a finite order P every omitted term has
/// exponent >= P. An untruncated series (order +inf) is exact.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;

  static PuiseuxSeries constant(const Coefficient& c);
  static PuiseuxSeries monomial(const Coefficient& c, const Rational& exponent);
  static PuiseuxSeries big_o(const Rational& order);
  /// Sorts, merges equal exponents, drops zero coefficients and anything at
  /// or above `order`.
  static PuiseuxSeries from_terms(std::vector<Term> terms, ExtRational order = std::nullopt);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const ExtRational& order() const noexcept { return order_; }

  bool is_exact() const noexcept { return !order_; }
  bool has_terms() const noexcept { return !terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && !order_; }
  bool is_real() const;
  bool is_monomial() const noexcept { return terms_.size() == 1 && !order_; }

  /// Exponent of the first term; the order when there are no terms.
  ExtRational leading_exponent() const;
  const Coefficient& leading_coefficient() const { return terms_.front().coeff; }

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  /// Product truncated at min(P_a + v_b, P_b + v_a).
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  PuiseuxSeries scaled(const Coefficient& c) const;
  /// Multiplication by eps^q.
  PuiseuxSeries shifted(const Rational& q) const;
  PuiseuxSeries conj() const;
  PuiseuxSeries truncated(const Rational& order) const;

  /// 1/s with relative precision `window` (result order -q + window, capped
  /// by the precision of s). Requires has_terms().
  PuiseuxSeries reciprocal(const Rational& window) const;
  /// Principal square root with relative precision `window`. Requires a
  /// positive rational-square leading coefficient.
  PuiseuxSeries sqrt(const Rational& window) const;

  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  // c * eps^q * (normalized)^power, with relative precision `window`.
  PuiseuxSeries normalized_power(const Rational& power, const Coefficient& lead_factor,
                                 const Rational& lead_exponent, const Rational& window) const;

  std::vector<Term> terms_;
  ExtRational order_;
};

/// `1 - eps^(1) + O(eps^(2))`; "0" for the exact zero.
std::string to_string(const PuiseuxSeries& s);

}  // namespace colombeau
