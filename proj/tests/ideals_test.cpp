#include "colombeau/ideals.hpp"

#include <gtest/gtest.h>

#include "colombeau/error.hpp"
#include "oracle.hpp"
#include "random_values.hpp"

using namespace colombeau;
using colombeau::testkit::Sampler;

namespace {

const IndexSet kA = IndexSet::evens();
const GenNumber kChiA = chi(kA);
const GenNumber kChiAc = chi(kA.complement());
const GenQuaternion kOne(1);

FgIdeal ideal(std::vector<GenNumber> gens) { return FgIdeal(std::move(gens)); }
QuatFgIdeal qideal(std::vector<GenQuaternion> gens) { return QuatFgIdeal(std::move(gens)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

std::vector<GenNumber> random_gens(Sampler& s, const testkit::Shape& shape = {}) {
  std::vector<GenNumber> gens;
  const long n = s.uniform(1, 3);
  for (long i = 0; i < n; ++i) gens.push_back(s.gen_number(shape));
  return gens;
}

// Union of the refinement atoms on which every generator vanishes, decided
// by evaluating representatives on the mesh.
IndexSet common_zero_oracle(const std::vector<GenNumber>& gens) {
  IndexSet z = IndexSet::none();
  for (const auto& atom : testkit::atoms(gens)) {
    bool all = true;
    for (const auto& g : gens) all = all && testkit::vanishes_on(g, atom);
    if (all) z = z.unite(atom);
  }
  return z;
}

}  // namespace

TEST(Ideals, AnnihilatorExamples) {
  EXPECT_EQ(annihilator_idempotent(ideal({alpha(1) * kChiA, alpha(2) * kChiA})), kChiAc);
  EXPECT_EQ(annihilator_idempotent(ideal({1})), GenNumber());
  EXPECT_EQ(annihilator_idempotent(ideal({kChiA, kChiAc})), GenNumber());
  EXPECT_EQ(kind_of([] { ideal({GenNumber::big_o(3)}); }), ErrorKind::InexactGenerator);
  EXPECT_EQ(kind_of([] { ideal({}); }), ErrorKind::InvalidArgument);
}

TEST(Ideals, DensityExamples) {
  EXPECT_TRUE(is_dense(ideal({kChiA, kChiAc * alpha(1)})));
  EXPECT_FALSE(is_dense(ideal({kChiA})));
  EXPECT_TRUE(is_dense(ideal({alpha(7)})));
  EXPECT_FALSE(is_dense(ideal({0})));
}

TEST(Ideals, WholeRingExamples) {
  EXPECT_TRUE(is_whole_ring(ideal({kChiA, kChiAc})));
  EXPECT_TRUE(is_whole_ring(ideal({alpha(1) * kChiA, kChiAc})));
  EXPECT_FALSE(is_whole_ring(ideal({kChiA})));
  const auto i = GenNumber::constant(Coefficient(0, 1));
  EXPECT_TRUE(is_whole_ring(ideal({i * kChiA.to_field(Field::Complex), kChiAc.to_field(Field::Complex)})));
}

TEST(Ideals, MembershipExamples) {
  EXPECT_TRUE(contains(ideal({kChiA}), alpha(9) * kChiA));
  EXPECT_FALSE(contains(ideal({kChiA}), kChiAc));
  EXPECT_TRUE(contains(ideal({alpha(1)}), 1));
  EXPECT_EQ(alpha(1) * alpha(-1), GenNumber(1));
  EXPECT_EQ(kind_of([] { contains(ideal({1}), GenNumber::big_o(2)); }), ErrorKind::InexactElement);
}

TEST(Ideals, NormIdealExamples) {
  const GenQuaternion x(kChiA, kChiA, 0, 0);
  EXPECT_EQ(norm_ideal(qideal({x})).generators(), std::vector<GenNumber>{2 * kChiA});
  EXPECT_EQ(norm_ideal(qideal({GenQuaternion::i()})).generators(), std::vector<GenNumber>{1});
  EXPECT_EQ(norm_ideal(qideal({GenQuaternion()})).generators(), std::vector<GenNumber>{0});
}

TEST(Ideals, QuaternionDensityExamples) {
  const GenQuaternion x(kChiA, kChiA, 0, 0);
  EXPECT_FALSE(quat_is_dense(qideal({x})));
  EXPECT_EQ(quat_annihilator(qideal({x})), kChiAc);
  EXPECT_TRUE(quat_is_dense(qideal({kOne + GenQuaternion::i()})));
  EXPECT_TRUE(quat_is_dense(qideal({GenQuaternion(kChiA), kChiAc * GenQuaternion::j()})));
}

TEST(Ideals, HullExamples) {
  const GenQuaternion x(kChiA, kChiA, 0, 0);
  auto hull = quat_hull(qideal({x}));
  EXPECT_EQ(hull.generators(), std::vector<GenQuaternion>{GenQuaternion(2 * kChiA)});
  EXPECT_TRUE(contains(norm_ideal(qideal({x})), kChiA));
  EXPECT_EQ(quat_hull(qideal({GenQuaternion()})).generators(), std::vector<GenQuaternion>{GenQuaternion()});
  EXPECT_EQ(quat_hull(qideal({kOne + GenQuaternion::k()})).generators(), std::vector<GenQuaternion>{GenQuaternion(2)});
  EXPECT_EQ(kind_of([] { qideal({GenQuaternion(GenNumber::big_o(1))}); }), ErrorKind::InexactGenerator);
}

TEST(IdealsProperty, CollapseAndAnnihilatorOracle) {
  Sampler s(301);
  int proper = 0;
  for (int t = 0; t < 300; ++t) {
    const auto gens = random_gens(s);
    const FgIdeal I(gens);
    const auto e = annihilator_idempotent(I);
    const bool dense = is_dense(I), whole = is_whole_ring(I), zero = e == GenNumber();
    ASSERT_EQ(dense, whole);
    ASSERT_EQ(dense, zero);
    ASSERT_EQ(e, chi(common_zero_oracle(gens)));
    for (const auto& g : gens) ASSERT_EQ(e * g, GenNumber());
    ASSERT_EQ(e * e, e);
    if (!dense) ++proper;
  }
  EXPECT_GT(proper, 30);
}

TEST(IdealsProperty, AnnihilatorIsMaximal) {
  Sampler s(302);
  for (int t = 0; t < 200; ++t) {
    const auto gens = random_gens(s);
    const auto z = annihilator_idempotent(FgIdeal(gens)).support();
    const auto lattice = testkit::atoms(gens);
    ASSERT_LE(lattice.size(), 20u);
    for (unsigned mask = 1; mask < (1u << lattice.size()); ++mask) {
      IndexSet S = IndexSet::none();
      for (std::size_t b = 0; b < lattice.size(); ++b)
        if (mask & (1u << b)) S = S.unite(lattice[b]);
      bool kills = true;
      for (const auto& g : gens) kills = kills && chi(S) * g == GenNumber();
      if (kills) ASSERT_TRUE(S.subset_of(z));
    }
  }
}

// A member is certified by regionwise division: on each atom where y is
// nonzero some generator is nonzero, and y / g leaves a residual of
// valuation at least W.
TEST(IdealsProperty, MembershipMatchesRegionwiseDivision) {
  Sampler s(303);
  for (int t = 0; t < 300; ++t) {
    auto gens = random_gens(s);
    const auto y = s.gen_number();
    const FgIdeal I(gens);
    gens.push_back(y);
    bool divisible = true;
    for (const auto& atom : testkit::atoms(gens)) {
      const auto ca = chi(atom);
      if (testkit::vanishes_on(y, atom)) continue;
      const GenNumber* pivot = nullptr;
      for (std::size_t i = 0; i + 1 < gens.size() && !pivot; ++i)
        if (!testkit::vanishes_on(gens[i], atom)) pivot = &gens[i];
      if (!pivot) {
        divisible = false;
        break;
      }
      const auto z = ca * y * invert(ca * *pivot + (1 - ca), 16);
      const auto residual = *pivot * z - ca * y;
      ASSERT_TRUE(at_least(valuation(residual), 16 + *valuation(ca * y).value)) << y << " / " << *pivot;
    }
    ASSERT_EQ(contains(I, y), divisible) << y;
  }
}

TEST(IdealsProperty, Convexity) {
  Sampler s(304);
  testkit::Shape small;
  small.exponent_lo = 2;
  small.exponent_hi = 6;
  int hits = 0;
  for (int t = 0; t < 400; ++t) {
    const auto gens = random_gens(s);
    const FgIdeal I(gens);
    GenNumber x;
    for (const auto& g : gens) x += g * s.gen_number();
    ASSERT_TRUE(contains(I, x));
    const auto y = s.gen_number(small);
    if (is_qpositive(abs(x) - abs(y)) != Tristate::Yes) continue;
    ++hits;
    ASSERT_TRUE(contains(I, y)) << "x=" << x << " y=" << y;
  }
  EXPECT_GT(hits, 40);
}

TEST(IdealsProperty, NormTransfer) {
  Sampler s(305);
  for (int t = 0; t < 300; ++t) {
    std::vector<GenQuaternion> gens;
    const long n = s.uniform(1, 3);
    for (long i = 0; i < n; ++i) gens.push_back(s.quaternion());
    const QuatFgIdeal I(gens);
    const auto N = norm_ideal(I);
    ASSERT_EQ(quat_is_dense(I), is_dense(N));
    for (const auto& g : gens)
      for (const auto& c : g.components()) ASSERT_TRUE(contains(N, c));
    ASSERT_NO_THROW(quat_hull(I));

    const auto e = quat_annihilator(I);
    const GenQuaternion qe(e);
    for (const auto& g : gens) {
      ASSERT_EQ(g * qe, GenQuaternion());
      ASSERT_EQ(qe * g, GenQuaternion());
    }
    // Quaternion-side search: the idempotents chi(S) over the generators'
    // region lattice that kill every generator are exactly those below e.
    std::vector<GenNumber> comps;
    for (const auto& g : gens) comps.insert(comps.end(), g.components().begin(), g.components().end());
    const auto lattice = testkit::atoms(comps);
    bool found_nonzero = false;
    for (unsigned mask = 1; mask < (1u << lattice.size()); ++mask) {
      IndexSet S = IndexSet::none();
      for (std::size_t b = 0; b < lattice.size(); ++b)
        if (mask & (1u << b)) S = S.unite(lattice[b]);
      bool kills = true;
      for (const auto& g : gens) kills = kills && g * GenQuaternion(chi(S)) == GenQuaternion();
      if (kills) {
        found_nonzero = true;
        ASSERT_TRUE(S.subset_of(e.support()));
      }
    }
    ASSERT_EQ(found_nonzero, !quat_is_dense(I));
  }
}

// Each component of an exact quaternion lies in the scalar ideal of its norm.
TEST(IdealsProperty, ComponentsLieInNormIdeal) {
  Sampler s(306);
  for (int t = 0; t < 300; ++t) {
    const auto x = s.quaternion();
    const FgIdeal N({norm_sq(x)});
    for (const auto& c : x.components()) ASSERT_TRUE(contains(N, c));
  }
}
