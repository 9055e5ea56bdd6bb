// Seeded generators of random class members for property suites.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "colombeau/gen_number.hpp"
#include "colombeau/index_set.hpp"
#include "colombeau/quaternion.hpp"

namespace colombeau::testkit {

struct Shape {
  int max_terms = 3;
  // Exponents are drawn from (1/exponent_den) Z within [exponent_lo, exponent_hi].
  long exponent_den = 2;
  long exponent_lo = -2;
  long exponent_hi = 4;
  long max_num = 5;
  long max_den = 3;
  // Probability that a region carries the exact zero.
  double zero_prob = 0.25;
  int max_parts = 3;
  Field field = Field::Real;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }
  long uniform(long lo, long hi);
  bool chance(double p);

  Rational rational(long max_num, long max_den, bool nonzero);
  Coefficient coefficient(const Shape& shape);
  /// Random eventually periodic set, optionally with finite exceptions.
  IndexSet index_set(bool with_exceptions);
  /// Random partition of the naturals into purely periodic parts.
  std::vector<IndexSet> partition(int max_parts);
  PuiseuxSeries series(const Shape& shape, bool allow_zero = true);
  /// Random exact element.
  GenNumber gen_number(const Shape& shape = {});
  /// Random exact element with every region nonzero.
  GenNumber unit(const Shape& shape = {});
  /// Random exact quaternion over one shared partition; with probability
  /// zero_prob a region is zero in all four components.
  GenQuaternion quaternion(const Shape& shape = {});

 private:
  std::mt19937_64 rng_;
};

}  // namespace colombeau::testkit
