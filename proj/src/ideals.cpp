#include "colombeau/ideals.hpp"

#include "colombeau/error.hpp"

namespace colombeau {

FgIdeal::FgIdeal(std::vector<GenNumber> generators) : gens_(std::move(generators)), support_(IndexSet::none()) {
  if (gens_.empty()) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
  // Mixed generators live in the complex ring.
  for (const auto& g : gens_)
    if (g.field() == Field::Complex) {
      for (auto& h : gens_) h = h.to_field(Field::Complex);
      break;
    }
  for (const auto& g : gens_) {
    if (!g.is_exact()) throw Error(ErrorKind::InexactGenerator, "generator " + to_string(g) + " is truncated");
    support_ = support_.unite(g.support());
  }
}

QuatFgIdeal::QuatFgIdeal(std::vector<GenQuaternion> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one generator");
  for (const auto& g : gens_)
    if (!g.is_exact()) throw Error(ErrorKind::InexactGenerator, "generator " + to_string(g) + " is truncated");
}

GenNumber annihilator_idempotent(const FgIdeal& ideal) {
  return chi(ideal.support().complement(), ideal.generators().front().field());
}

bool is_dense(const FgIdeal& ideal) { return annihilator_idempotent(ideal) == GenNumber(); }

bool is_whole_ring(const FgIdeal& ideal) {
  GenNumber sum = GenNumber().to_field(ideal.generators().front().field());
  for (const auto& g : ideal.generators()) sum += g.field() == Field::Real ? abs(g) : abs_sq(g);
  return std::holds_alternative<Unit<GenNumber>>(classify(sum));
}

bool contains(const FgIdeal& ideal, const GenNumber& y) {
  if (!y.is_exact()) throw Error(ErrorKind::InexactElement, "element " + to_string(y) + " is truncated");
  return y.support().subset_of(ideal.support());
}

FgIdeal norm_ideal(const QuatFgIdeal& ideal) {
  std::vector<GenNumber> gens;
  for (const auto& g : ideal.generators()) gens.push_back(norm_sq(g));
  return FgIdeal(std::move(gens));
}

bool quat_is_dense(const QuatFgIdeal& ideal) { return is_dense(norm_ideal(ideal)); }

GenNumber quat_annihilator(const QuatFgIdeal& ideal) { return annihilator_idempotent(norm_ideal(ideal)); }

QuatFgIdeal quat_hull(const QuatFgIdeal& ideal) {
  const auto n = norm_ideal(ideal);
  for (const auto& g : ideal.generators())
    for (const auto& c : g.components())
      if (!contains(n, c))
        throw Error(ErrorKind::ContainmentViolation,
                    "component " + to_string(c) + " of " + to_string(g) + " lies outside the norm ideal");
  std::vector<GenQuaternion> gens;
  for (const auto& s : n.generators()) gens.emplace_back(s);
  return QuatFgIdeal(std::move(gens));
}

}  // namespace colombeau
