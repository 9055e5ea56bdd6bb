/*
 * Multivariate polynomials over the generalized scalars and their
 * annihilators.
 *
 * The scalar ring is commutative and reduced, so b kills f R[x] exactly when
 * b kills every coefficient of f. The largest such idempotent is chi of the
 * common zero set of the coefficients, and any nonzero annihilator of f
 * yields it as a nonzero constant one.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "colombeau/gen_number.hpp"

namespace colombeau {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, GenNumber, GradedLex>;

  /// The zero polynomial in nvars > 0 variables.
  explicit MultiPoly(std::size_t nvars);
  static MultiPoly constant(std::size_t nvars, const GenNumber& c);
  /// x_{index+1}.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(std::size_t nvars, const GenNumber& c, Exponents exponents);

  std::size_t nvars() const noexcept { return nvars_; }
  /// Nonzero coefficients only.
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_exact() const;
  GenNumber coeff(const Exponents& e) const;
  std::vector<GenNumber> coefficients() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const Exponents& e, const GenNumber& c);

  std::size_t nvars_;
  Terms terms_;

  friend MultiPoly padd(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly pmul(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly scale(const MultiPoly& f, const GenNumber& r);
  friend MultiPoly embed(const MultiPoly& f, std::size_t nvars);
  friend std::vector<MultiPoly> coefficients_in_last(const MultiPoly& f);
};

/// Arithmetic throws ArityMismatch on differing nvars. Real and complex
/// coefficients meet over the complex field.
MultiPoly padd(const MultiPoly& f, const MultiPoly& g);
MultiPoly psub(const MultiPoly& f, const MultiPoly& g);
MultiPoly pmul(const MultiPoly& f, const MultiPoly& g);
MultiPoly scale(const MultiPoly& f, const GenNumber& r);

/// The same polynomial in nvars >= f.nvars() variables.
MultiPoly embed(const MultiPoly& f, std::size_t nvars);
/// f as a polynomial in the last variable: entry k is the coefficient of
/// x_n^k, a polynomial in the first n - 1 variables. Needs nvars >= 2.
std::vector<MultiPoly> coefficients_in_last(const MultiPoly& f);

/// chi of the common zero set of the coefficients. Throws
/// InexactCoefficient.
GenNumber ann_constant(const MultiPoly& f);

/// b c = 0 for every coefficient c, and f h b = 0 for h = 1 and
/// trials - 1 further random h. Throws if the two checks disagree.
bool verify_annihilator(const MultiPoly& f, const GenNumber& b, int trials, std::uint64_t seed = 0);

enum class Obstruction { Unsolvable, NoVerdict };

/// For an operator with symbol Lf and a nonzero a killing Lf's coefficients,
/// a L(u) = 0 for every u, so L(u) = target has no solution once
/// a target != 0. Throws PreconditionFailed.
Obstruction operator_obstruction(const GenNumber& a, const MultiPoly& lf, const MultiPoly& target);

std::string_view to_string(Obstruction o);
/// Terms `(c)*x1^a*x2^b` joined by ", " in graded lexicographic order;
/// "0" for the zero polynomial.
std::string to_string(const MultiPoly& f);

}  // namespace colombeau
