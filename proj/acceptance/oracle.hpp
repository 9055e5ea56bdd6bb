// Independent oracles that evaluate representatives on the dyadic mesh
// eps_n = 2^-n rather than reasoning about series symbolically.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colombeau/gen_number.hpp"

namespace colombeau::testkit {

/// Value of the series at eps_n as an exact rational; every n*q must be an
/// integer and coefficients must be real.
Rational eval_exact(const PuiseuxSeries& s, std::uint64_t n);

/// Value of x's representative at eps_n (piece containing n), exactly.
Rational eval_exact(const GenNumber& x, std::uint64_t n);

/// Mesh-slope estimate of the valuation of the vector (x_0, ..., x_k):
/// for each region of the common refinement the slope of log|x(eps_n)|^2
/// against log eps_n^2 between its two largest indices in [lo, hi], minimized
/// over regions. std::nullopt when |x| vanishes at every sampled index.
/// Evaluation uses 2048-bit MPFR; exponents need not be integral.
std::optional<double> mesh_slope(const std::vector<GenNumber>& components, std::uint64_t lo = 20,
                                 std::uint64_t hi = 60);

/// Nonempty intersections of the pieces' regions (common refinement).
std::vector<IndexSet> atoms(const std::vector<GenNumber>& xs);

/// Whether x's representative is zero at every mesh index of s in [lo, hi]
/// (MPFR evaluation); s must meet that range.
bool vanishes_on(const GenNumber& x, const IndexSet& s, std::uint64_t lo = 20, std::uint64_t hi = 200);

}  // namespace colombeau::testkit
