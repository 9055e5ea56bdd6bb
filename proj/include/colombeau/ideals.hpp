/*
 * Finitely generated ideals of the scalar ring and of the quaternions.
 *
 * For exact generators everything reduces to supports: a generator is, on
 * each region, either the exact zero or a Puiseux series with a nonzero
 * leading term, and such a series is invertible up to a moderate factor.
 * So y lies in <g_1..g_n> iff y vanishes wherever all g_i do, and the
 * annihilator of the ideal is chi of the common zero set.
 */
#pragma once

#include <vector>

#include "colombeau/gen_number.hpp"
#include "colombeau/quaternion.hpp"

namespace colombeau {

class FgIdeal {
 public:
  /// Throws InvalidArgument on an empty list, InexactGenerator on a
  /// truncated generator. Real generators are promoted when any is complex.
  explicit FgIdeal(std::vector<GenNumber> generators);

  const std::vector<GenNumber>& generators() const noexcept { return gens_; }
  /// Union of the generators' supports.
  const IndexSet& support() const noexcept { return support_; }

 private:
  std::vector<GenNumber> gens_;
  IndexSet support_;
};

class QuatFgIdeal {
 public:
  explicit QuatFgIdeal(std::vector<GenQuaternion> generators);

  const std::vector<GenQuaternion>& generators() const noexcept { return gens_; }

 private:
  std::vector<GenQuaternion> gens_;
};

/// chi(Z) for Z the common zero set of the generators. It kills every
/// generator and dominates every other idempotent that does.
GenNumber annihilator_idempotent(const FgIdeal& ideal);
/// Zero annihilator.
bool is_dense(const FgIdeal& ideal);
/// Whether sum |g_i| (sum g_i conj(g_i) over C) is a unit.
bool is_whole_ring(const FgIdeal& ideal);
/// support(y) within support(ideal). Throws InexactElement.
bool contains(const FgIdeal& ideal, const GenNumber& y);

/// The scalar ideal generated by norm_sq of the generators.
FgIdeal norm_ideal(const QuatFgIdeal& ideal);
bool quat_is_dense(const QuatFgIdeal& ideal);
/// Central idempotent e with g e = e g = 0 for every generator.
GenNumber quat_annihilator(const QuatFgIdeal& ideal);
/// The quaternion ideal generated by norm_ideal(ideal), after checking that
/// it contains every generator component. Throws ContainmentViolation.
QuatFgIdeal quat_hull(const QuatFgIdeal& ideal);

}  // namespace colombeau
