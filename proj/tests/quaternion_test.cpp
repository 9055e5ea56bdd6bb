#include "colombeau/quaternion.hpp"

#include <gtest/gtest.h>

#include <set>

#include "colombeau/error.hpp"
#include "oracle.hpp"
#include "random_values.hpp"

using namespace colombeau;
using colombeau::testkit::Sampler;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

const GenNumber kChiA = chi(IndexSet::evens());
const GenNumber kChiAc = chi(IndexSet::odds());
const GenQuaternion kI = GenQuaternion::i();
const GenQuaternion kJ = GenQuaternion::j();
const GenQuaternion kK = GenQuaternion::k();
const GenQuaternion kOne(1);

}  // namespace

TEST(Quaternion, HamiltonTable) {
  EXPECT_EQ(kI * kJ, kK);
  EXPECT_EQ(kJ * kI, -kK);
  EXPECT_EQ(kJ * kK, kI);
  EXPECT_EQ(kK * kI, kJ);
  EXPECT_EQ(kI * kI, GenQuaternion(-1));
  EXPECT_EQ(GenQuaternion(kChiA) * GenQuaternion(kChiAc), GenQuaternion());
  EXPECT_THROW(GenQuaternion(GenNumber(1).to_field(Field::Complex) * GenNumber::constant(Coefficient(0, 1))),
               Error);
}

TEST(Quaternion, Conjugation) {
  EXPECT_EQ((kOne + kI).conj(), kOne - kI);
  EXPECT_EQ((alpha(1) * kK).conj(), -(alpha(1) * kK));
  const GenQuaternion real(alpha(2) + kChiA);
  EXPECT_EQ(real.conj(), real);
}

TEST(Quaternion, NormSq) {
  EXPECT_EQ(norm_sq(kOne + kI), GenNumber(2));
  EXPECT_EQ(norm_sq(GenQuaternion(kChiA, kChiA, 0, 0)), 2 * kChiA);
  EXPECT_EQ(norm_sq(alpha(1) * kJ), alpha(2));
}

TEST(Quaternion, Norm) {
  EXPECT_EQ(norm(GenQuaternion(alpha(1))), alpha(1));
  const auto x = kChiA * GenQuaternion(3, 4, 0, 0) + GenQuaternion(kChiAc);
  EXPECT_EQ(norm(x), 5 * kChiA + kChiAc);
  try {
    norm(kOne + kI);
    FAIL() << "sqrt(2) is irrational";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IrrationalLeadingCoefficient);
  }
}

TEST(Quaternion, Classify) {
  const auto u = qclassify(kOne + kI);
  ASSERT_TRUE(std::holds_alternative<Unit<GenQuaternion>>(u));
  EXPECT_EQ(std::get<Unit<GenQuaternion>>(u).inverse, GenNumber::constant(q(1, 2)) * (kOne - kI));

  const GenQuaternion x(kChiA, kChiA, 0, 0);
  const auto zd = qclassify(x);
  ASSERT_TRUE(std::holds_alternative<ZeroDivisor>(zd));
  const auto& e = std::get<ZeroDivisor>(zd).witness;
  EXPECT_EQ(e, kChiAc);
  EXPECT_EQ(x * GenQuaternion(e), GenQuaternion());
  EXPECT_EQ(GenQuaternion(e) * x, GenQuaternion());

  EXPECT_TRUE(std::holds_alternative<Zero>(qclassify(GenQuaternion())));
  EXPECT_TRUE(std::holds_alternative<Indeterminate>(qclassify(GenQuaternion(GenNumber::big_o(2)))));
  EXPECT_THROW(qinvert(x), Error);
}

TEST(Quaternion, Valuation) {
  EXPECT_EQ(qvaluation(alpha(1) + alpha(2) * kI), (Valuation{q(1), true}));
  const auto slope = testkit::mesh_slope({alpha(1), alpha(2), 0, 0});
  ASSERT_TRUE(slope);
  EXPECT_NEAR(*slope, 1.0, 1e-6);
  EXPECT_EQ(qvaluation(kChiA * kJ), (Valuation{q(0), true}));
  const auto x = alpha(3) * kI + kK;
  EXPECT_TRUE(qdistance(x, x).is_infinite());
  EXPECT_EQ(qvaluation(GenQuaternion(alpha(2), GenNumber::big_o(1))), (Valuation{q(1), false}));
  EXPECT_EQ(qvaluation(GenQuaternion(alpha(1), GenNumber::big_o(1))), (Valuation{q(1), true}));
}

TEST(Quaternion, Idempotents) {
  EXPECT_TRUE(is_idempotent(GenQuaternion(kChiA)));
  EXPECT_EQ(idempotent_decompose(GenQuaternion(kChiA)), IndexSet::evens());
  const GenQuaternion half(GenNumber::constant(q(1, 2)), GenNumber::constant(q(1, 2)), 0, 0);
  // (1/2 + i/2)^2 = i/2.
  EXPECT_EQ(half * half, GenQuaternion(0, GenNumber::constant(q(1, 2)), 0, 0));
  EXPECT_FALSE(is_idempotent(half));
  EXPECT_THROW(idempotent_decompose(half), Error);
  EXPECT_TRUE(is_idempotent(GenQuaternion(1)));
  EXPECT_EQ(idempotent_decompose(GenQuaternion(1)), IndexSet::all());
}

TEST(Quaternion, IdempotentSearchFindsOnlyRealIdempotents) {
  const std::vector<GenNumber> values{0, 1, GenNumber::constant(q(1, 2)), kChiA, kChiAc};
  std::vector<GenQuaternion> found;
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values)
        for (const auto& d : values) {
          const GenQuaternion x(a, b, c, d);
          if (is_idempotent(x)) found.push_back(x);
        }
  const std::vector<GenQuaternion> expected{GenQuaternion(0), GenQuaternion(1), GenQuaternion(kChiA),
                                            GenQuaternion(kChiAc)};
  ASSERT_EQ(found.size(), expected.size());
  for (const auto& e : expected) EXPECT_NE(std::find(found.begin(), found.end(), e), found.end()) << e;
  for (const auto& x : found) EXPECT_NO_THROW(idempotent_decompose(x));
}

TEST(Quaternion, UnitNear) {
  EXPECT_EQ(unit_near(GenQuaternion(), 5), GenQuaternion(alpha(5)));
  const auto u = unit_near(GenQuaternion(kChiA), 3);
  EXPECT_EQ(u, GenQuaternion(kChiA + kChiAc * alpha(3)));
  EXPECT_TRUE(std::holds_alternative<Unit<GenQuaternion>>(qclassify(u)));
  EXPECT_EQ(unit_near(kOne + kI, 7), kOne + kI);
  EXPECT_THROW(unit_near(GenQuaternion(GenNumber::big_o(1)), 2), Error);
}

TEST(QuaternionProperty, AlgebraLaws) {
  Sampler s(201);
  for (int i = 0; i < 300; ++i) {
    const auto x = s.quaternion(), y = s.quaternion(), z = s.quaternion();
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x * y).conj(), y.conj() * x.conj());
    ASSERT_EQ(x.conj().conj(), x);
    const auto xx = x * x.conj();
    ASSERT_EQ(xx, GenQuaternion(norm_sq(x)));
    ASSERT_EQ(norm_sq(x * y), norm_sq(x) * norm_sq(y));
    ASSERT_EQ(is_qpositive(norm_sq(x)), Tristate::Yes);
  }
}

TEST(QuaternionProperty, Dichotomy) {
  Sampler s(202);
  for (int i = 0; i < 500; ++i) {
    const auto x = s.quaternion();
    const auto c = qclassify(x);
    ASSERT_EQ(c.index(), classify(norm_sq(x)).index());
    if (const auto* u = std::get_if<Unit<GenQuaternion>>(&c)) {
      const auto r = x * u->inverse - GenQuaternion(1);
      ASSERT_TRUE(at_least(qvaluation(r), 16)) << x;
      const auto l = u->inverse * x - GenQuaternion(1);
      ASSERT_TRUE(at_least(qvaluation(l), 16)) << x;
    } else if (const auto* zd = std::get_if<ZeroDivisor>(&c)) {
      const GenQuaternion e(zd->witness);
      ASSERT_EQ(x * e, GenQuaternion());
      ASSERT_EQ(e * x, GenQuaternion());
      ASSERT_TRUE(is_idempotent(e));
      ASSERT_NE(e, GenQuaternion());
    }
  }
}

TEST(QuaternionProperty, ValuationMatchesMeshSlope) {
  Sampler s(203);
  for (int i = 0; i < 300; ++i) {
    const auto x = s.quaternion();
    const auto v = qvaluation(x);
    Valuation direct{std::nullopt, true};
    for (const auto& c : x.components()) direct.value = ext_min(direct.value, valuation(c).value);
    ASSERT_EQ(v.value, direct.value);
    const auto& comps = x.components();
    const auto slope = testkit::mesh_slope({comps.begin(), comps.end()});
    ASSERT_EQ(slope.has_value(), !v.is_infinite()) << x;
    if (slope) ASSERT_NEAR(*slope, v.value->get_d(), 1e-6) << x;
  }
}

TEST(QuaternionProperty, UnitsAreDense) {
  Sampler s(204);
  for (int i = 0; i < 200; ++i) {
    const auto x = s.quaternion();
    for (long n : {1, 4, 16}) {
      const auto u = unit_near(x, n);
      ASSERT_TRUE(std::holds_alternative<Unit<GenQuaternion>>(qclassify(u)));
      ASSERT_TRUE(at_least(qdistance(x, u), n));
    }
  }
}
