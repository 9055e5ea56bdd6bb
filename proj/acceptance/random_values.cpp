#include "random_values.hpp"

#include <array>

namespace colombeau::testkit {

namespace {
constexpr std::uint32_t kModuli[] = {1, 2, 3, 4, 6};
}

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

bool Sampler::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::rational(long max_num, long max_den, bool nonzero) {
  long num = uniform(-max_num, max_num);
  while (nonzero && num == 0) num = uniform(-max_num, max_num);
  return make_rational(num, uniform(1, max_den));
}

Coefficient Sampler::coefficient(const Shape& shape) {
  Rational re = rational(shape.max_num, shape.max_den, shape.field == Field::Real);
  if (shape.field == Field::Real) return Coefficient(re);
  Rational im = rational(shape.max_num, shape.max_den, false);
  if (sgn(re) == 0 && sgn(im) == 0) re = 1;
  return {re, im};
}

IndexSet Sampler::index_set(bool with_exceptions) {
  const std::uint32_t m = kModuli[uniform(0, 4)];
  std::vector<std::uint32_t> residues;
  for (std::uint32_t r = 0; r < m; ++r)
    if (chance(0.5)) residues.push_back(r);
  if (!with_exceptions) return IndexSet::make_periodic(m, residues);
  const auto threshold = static_cast<std::uint64_t>(uniform(0, 12));
  std::vector<std::uint64_t> ins, outs;
  for (std::uint64_t n = 0; n < threshold; ++n) {
    const long roll = uniform(0, 3);
    if (roll == 0) ins.push_back(n);
    if (roll == 1) outs.push_back(n);
  }
  return IndexSet::make_periodic(m, residues, threshold, ins, outs);
}

std::vector<IndexSet> Sampler::partition(int max_parts) {
  const std::uint32_t m = kModuli[uniform(0, 4)];
  const long parts = uniform(1, max_parts);
  std::vector<std::vector<std::uint32_t>> residues(static_cast<std::size_t>(parts));
  for (std::uint32_t r = 0; r < m; ++r) residues[static_cast<std::size_t>(uniform(0, parts - 1))].push_back(r);
  std::vector<IndexSet> out;
  for (const auto& rs : residues)
    if (!rs.empty()) out.push_back(IndexSet::make_periodic(m, rs));
  return out;
}

PuiseuxSeries Sampler::series(const Shape& shape, bool allow_zero) {
  if (allow_zero && chance(shape.zero_prob)) return {};
  const long terms = uniform(1, shape.max_terms);
  std::vector<Term> ts;
  for (long t = 0; t < terms; ++t) {
    const long k = uniform(shape.exponent_lo * shape.exponent_den, shape.exponent_hi * shape.exponent_den);
    ts.push_back({make_rational(k, shape.exponent_den), coefficient(shape)});
  }
  auto s = PuiseuxSeries::from_terms(std::move(ts));
  if (!s.has_terms()) s = PuiseuxSeries::constant(1);
  return s;
}

GenNumber Sampler::gen_number(const Shape& shape) {
  std::vector<Piece> pieces;
  for (auto& region : partition(shape.max_parts)) pieces.push_back({std::move(region), series(shape)});
  return GenNumber::from_pieces(std::move(pieces), shape.field);
}

GenNumber Sampler::unit(const Shape& shape) {
  std::vector<Piece> pieces;
  for (auto& region : partition(shape.max_parts)) pieces.push_back({std::move(region), series(shape, false)});
  return GenNumber::from_pieces(std::move(pieces), shape.field);
}

GenQuaternion Sampler::quaternion(const Shape& shape) {
  std::array<std::vector<Piece>, 4> pieces;
  for (auto& region : partition(shape.max_parts)) {
    const bool all_zero = chance(shape.zero_prob);
    for (auto& ps : pieces) ps.push_back({region, all_zero ? PuiseuxSeries() : series(shape)});
  }
  return {GenNumber::from_pieces(std::move(pieces[0])), GenNumber::from_pieces(std::move(pieces[1])),
          GenNumber::from_pieces(std::move(pieces[2])), GenNumber::from_pieces(std::move(pieces[3]))};
}

}  // namespace colombeau::testkit
