/*
 * Polynomials with generalized complex coefficients, as stand-ins for
 * generalized holomorphic functions with a polynomial representative.
 *
 * The identity theorem can only hold at z0 if the ideal of Taylor
 * coefficients at z0 has zero annihilator. When it does not, an idempotent
 * e killing every coefficient gives points x_n = z0 + e alpha_n with
 * f(x_n) = f(z0) that converge to z0 in the sharp topology.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "colombeau/gen_number.hpp"
#include "colombeau/ideals.hpp"

namespace colombeau {

class GenPolynomial {
 public:
  /// a_0 + a_1 z + ...; coefficients move to the complex field and trailing
  /// zeros are dropped. Throws InexactInput on truncated coefficients.
  explicit GenPolynomial(std::vector<GenNumber> coeffs);

  const std::vector<GenNumber>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// Coefficient of z^k, zero beyond the degree.
  GenNumber coeff(std::size_t k) const;

  friend bool operator==(const GenPolynomial&, const GenPolynomial&) = default;

 private:
  std::vector<GenNumber> coeffs_;
};

GenNumber eval(const GenPolynomial& f, const GenNumber& z);
GenPolynomial derivative(const GenPolynomial& f);
/// Coefficients of w -> f(z0 + w).
GenPolynomial taylor_shift(const GenPolynomial& f, const GenNumber& z0);
/// Ideal of the Taylor coefficients of index >= 1 at z0; <0> for constants.
FgIdeal cf_ideal(const GenPolynomial& f, const GenNumber& z0);

struct DenseVerdict {};
struct Counterexample {
  GenNumber idempotent;  // kills every Taylor coefficient of index >= 1
  std::string sequence;
  std::vector<Rational> verified_n;
};
using IdentityVerdict = std::variant<DenseVerdict, Counterexample>;

inline const std::vector<Rational> kDefaultVerifyN{1, 2, 5, 16};

/// DenseVerdict when the coefficient ideal is dense, which is necessary for
/// the identity theorem but not sufficient. Otherwise the counterexample
/// sequence, checked with verify_counterexample at each of verify_n.
/// Throws InexactInput, OutOfDomain when z0 is unbounded.
IdentityVerdict identity_check(const GenPolynomial& f, const GenNumber& z0,
                               const std::vector<Rational>& verify_n = kDefaultVerifyN);

/// f(z0 + e alpha_n) - f(z0) negligible while e alpha_n has valuation
/// exactly n. Throws NotIdempotent.
bool verify_counterexample(const GenPolynomial& f, const GenNumber& z0, const GenNumber& e, const Rational& n);

enum class QuadraticVerdict { UniqueInUnitBall, IdempotentKillsQuadratic, Inconclusive };

struct QuadraticReport {
  QuadraticVerdict verdict;
  /// V(a_2 / a_1) when both are units.
  std::optional<Valuation> ratio_valuation;
  /// Nonzero e with e a_2 = 0 for the killed case.
  std::optional<GenNumber> idempotent;
};

/// Uniqueness of solutions of p(z) = p(z0) near z0 for p of degree <= 2.
/// Throws DegreeTooHigh, OutOfDomain.
QuadraticReport quadratic_unique_solution_check(const GenPolynomial& p, const GenNumber& z0);

std::string_view to_string(QuadraticVerdict v);

}  // namespace colombeau
