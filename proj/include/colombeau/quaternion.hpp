#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <variant>

#include "colombeau/gen_number.hpp"

namespace colombeau {

/// x0 + x1 i + x2 j + x3 k over the real generalized numbers.
class GenQuaternion {
 public:
  GenQuaternion() = default;
  GenQuaternion(GenNumber x0, GenNumber x1 = 0, GenNumber x2 = 0, GenNumber x3 = 0);  // NOLINT(implicit)

  static GenQuaternion i() { return {0, 1, 0, 0}; }
  static GenQuaternion j() { return {0, 0, 1, 0}; }
  static GenQuaternion k() { return {0, 0, 0, 1}; }

  const GenNumber& operator[](std::size_t idx) const { return c_[idx]; }
  const std::array<GenNumber, 4>& components() const noexcept { return c_; }

  bool is_exact() const;
  bool is_scalar() const;
  GenQuaternion conj() const;

  GenQuaternion operator-() const;
  friend GenQuaternion operator+(const GenQuaternion& a, const GenQuaternion& b);
  friend GenQuaternion operator-(const GenQuaternion& a, const GenQuaternion& b);
  /// Hamilton product.
  friend GenQuaternion operator*(const GenQuaternion& a, const GenQuaternion& b);
  friend GenQuaternion operator*(const GenNumber& s, const GenQuaternion& x);

  friend bool operator==(const GenQuaternion&, const GenQuaternion&) = default;

 private:
  std::array<GenNumber, 4> c_;
};

/// n(x)^2 = x conj(x) = x0^2 + x1^2 + x2^2 + x3^2.
GenNumber norm_sq(const GenQuaternion& x);
/// n(x) = sqrt(norm_sq(x)); partial, see sqrt().
GenNumber norm(const GenQuaternion& x, const Rational& window = kDefaultWindow);

using QuatClassification = std::variant<Unit<GenQuaternion>, ZeroDivisor, Zero, Indeterminate>;

/// Driven by classify(norm_sq(x)). The inverse is conj(x) / n(x)^2; a
/// zero-divisor witness is a central idempotent e with x e = e x = 0.
QuatClassification qclassify(const GenQuaternion& x, const Rational& window = kDefaultWindow);

/// Throws NotAUnit unless qclassify(x) is a unit.
GenQuaternion qinvert(const GenQuaternion& x, const Rational& window = kDefaultWindow);

/// Minimum of the component valuations.
Valuation qvaluation(const GenQuaternion& x);
inline Valuation qdistance(const GenQuaternion& x, const GenQuaternion& y) { return qvaluation(x - y); }

/// x * x == x for an exact x.
bool is_idempotent(const GenQuaternion& x);
/// The set A with x = chi(A); throws NotIdempotent.
IndexSet idempotent_decompose(const GenQuaternion& x);

/// x + chi(Z) alpha_n with Z the zero regions of norm_sq(x).
GenQuaternion unit_near(const GenQuaternion& x, const Rational& n);

/// `quat(a; b; c; d)`.
std::string to_string(const GenQuaternion& x);
std::ostream& operator<<(std::ostream& os, const GenQuaternion& x);

}  // namespace colombeau
