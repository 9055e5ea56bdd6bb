/*
 * Colombeau generalized numbers on the dyadic mesh.
 *
 * An element is a finite partition of the naturals into eventually periodic
 * regions, each carrying a truncated Puiseux series: on region S the
 * representative is eps_n -> sum c_i eps_n^{q_i} for n in S. Every such net
 * is moderate, and a net is negligible exactly when each region's series
 * has no terms. Regions are stored by their periodic part only, since a
 * change on finitely many mesh points is a negligible perturbation; this
 * makes the representation canonical.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "colombeau/index_set.hpp"
#include "colombeau/puiseux.hpp"
#include "colombeau/rational.hpp"

namespace colombeau {

enum class Field { Real, Complex };

/// Window used by invert/sqrt when none is given.
inline constexpr long kDefaultWindow = 16;

struct Piece {
  IndexSet region;
  PuiseuxSeries series;
  friend bool operator==(const Piece&, const Piece&) = default;
};

class GenNumber {
 public:
  /// Exact zero over the reals.
  GenNumber();
  GenNumber(long n);  // NOLINT(implicit)

  static GenNumber constant(const Coefficient& c);
  static GenNumber from_series(PuiseuxSeries s, Field field = Field::Real);
  /// Regions must partition the naturals; throws otherwise.
  static GenNumber from_pieces(std::vector<Piece> pieces, Field field = Field::Real);
  /// Zero known only up to O(eps^order).
  static GenNumber big_o(const Rational& order);

  Field field() const noexcept { return field_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  bool is_exact() const;
  bool is_real_valued() const;
  /// Promotion to the complex field, or back to the reals for real-valued
  /// elements.
  GenNumber to_field(Field field) const;

  GenNumber conj() const;
  GenNumber scaled(const Coefficient& c) const;
  /// Union of regions whose series is not the exact zero.
  IndexSet support() const;
  /// Union of regions whose series is the exact zero.
  IndexSet zero_set() const { return support().complement(); }

  GenNumber operator-() const;
  friend GenNumber operator+(const GenNumber& a, const GenNumber& b);
  friend GenNumber operator-(const GenNumber& a, const GenNumber& b);
  friend GenNumber operator*(const GenNumber& a, const GenNumber& b);
  GenNumber& operator+=(const GenNumber& b) { return *this = *this + b; }
  GenNumber& operator-=(const GenNumber& b) { return *this = *this - b; }
  GenNumber& operator*=(const GenNumber& b) { return *this = *this * b; }

  /// Structural equality of canonical forms (the field tag is ignored).
  friend bool operator==(const GenNumber& a, const GenNumber& b) { return a.pieces_ == b.pieces_; }

 private:
  GenNumber(Field field, std::vector<Piece> pieces);
  static GenNumber canonical(Field field, std::vector<Piece> pieces);
  template <class Op>
  static GenNumber zip(const GenNumber& a, const GenNumber& b, Op op);
  template <class Op>
  GenNumber map(Op op) const;

  Field field_ = Field::Real;
  std::vector<Piece> pieces_;
};

GenNumber alpha(const Rational& r);
GenNumber chi(const IndexSet& s, Field field = Field::Real);

/// Sharp valuation V(x) = sup{a : |x(eps)| / eps^a -> 0}. When some region is
/// zero only up to a finite order the value may be a lower bound
/// (exact == false).
struct Valuation {
  ExtRational value;  // std::nullopt is +inf
  bool exact = true;

  bool is_infinite() const noexcept { return !value; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

std::string to_string(const Valuation& v);
/// e^{-V} with six significant digits, display only.
std::string display_norm(const Valuation& v);
inline bool at_least(const Valuation& v, const Rational& bound) { return !ext_less(v.value, bound); }

enum class Negligibility { Yes, No, ZeroUpToPrecision };
enum class Tristate { Yes, No, Indeterminate };
enum class Equality { Equal, NotEqual, EqualUpToPrecision };

Negligibility is_negligible(const GenNumber& x);
Valuation valuation(const GenNumber& x);
inline Valuation sharp_norm(const GenNumber& x) { return valuation(x); }
inline Valuation distance(const GenNumber& x, const GenNumber& y) { return valuation(x - y); }
Equality equals(const GenNumber& x, const GenNumber& y);

template <class T>
struct Unit {
  T inverse;
};
struct ZeroDivisor {
  GenNumber witness;  // nonzero idempotent with x * witness == 0
};
struct Zero {};
struct Indeterminate {};

using Classification = std::variant<Unit<GenNumber>, ZeroDivisor, Zero, Indeterminate>;

/// Unit / zero-divisor dichotomy. Indeterminate when some region is zero
/// only up to precision.
Classification classify(const GenNumber& x, const Rational& window = kDefaultWindow);

template <class... Ts>
std::string_view kind_name(const std::variant<Ts...>& c) {
  switch (c.index()) {
    case 0: return "unit";
    case 1: return "zero_divisor";
    case 2: return "zero";
    default: return "indeterminate";
  }
}

/// Inverse with x * invert(x, W) - 1 of valuation >= W. Monomial regions
/// invert exactly. Throws NotAUnit.
GenNumber invert(const GenNumber& x, const Rational& window = kDefaultWindow);

Tristate is_qpositive(const GenNumber& x);
/// Regionwise |x| for real x; throws IndeterminateSign / ComplexOrderUndefined.
GenNumber abs(const GenNumber& x);
/// x * conj(x), any field.
GenNumber abs_sq(const GenNumber& x);
/// Square root with sqrt(x)^2 - x of valuation >= W. Needs a q-positive x
/// whose leading coefficients are squares of rationals.
GenNumber sqrt(const GenNumber& x, const Rational& window = kDefaultWindow);

/// x + chi(Z) alpha_n, Z the exact-zero regions of x: a unit within sharp
/// distance e^{-n} of x.
GenNumber unit_near(const GenNumber& x, const Rational& n);

/// Canonical expression text, parseable by the expression grammar.
std::string to_string(const GenNumber& x);
std::ostream& operator<<(std::ostream& os, const GenNumber& x);

}  // namespace colombeau
