#include "colombeau/index_set.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "colombeau/error.hpp"
#include "random_values.hpp"

using namespace colombeau;
using colombeau::testkit::Sampler;

namespace {

constexpr int kCases = 1000;

struct RawSet {
  std::uint32_t m;
  std::vector<std::uint32_t> t;
  std::uint64_t n;
  std::vector<std::uint64_t> ins, outs;

  bool member(std::uint64_t k) const {
    if (k < n) {
      if (std::count(ins.begin(), ins.end(), k)) return true;
      if (std::count(outs.begin(), outs.end(), k)) return false;
    }
    return std::count(t.begin(), t.end(), static_cast<std::uint32_t>(k % m)) > 0;
  }
};

RawSet random_raw(Sampler& s) {
  RawSet r;
  r.m = static_cast<std::uint32_t>(s.uniform(1, 12));
  for (std::uint32_t i = 0; i < r.m; ++i)
    if (s.chance(0.4)) r.t.push_back(i);
  r.n = static_cast<std::uint64_t>(s.uniform(0, 15));
  for (std::uint64_t k = 0; k < r.n; ++k) {
    const long roll = s.uniform(0, 4);
    if (roll == 0) r.ins.push_back(k);
    if (roll == 1) r.outs.push_back(k);
  }
  return r;
}

}  // namespace

TEST(IndexSet, EvensAreCanonical) {
  const auto evens = IndexSet::make_periodic(2, {0}, 0, {}, {});
  EXPECT_EQ(evens.modulus(), 2u);
  EXPECT_EQ(evens.residues(), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(evens.threshold(), 0u);
  EXPECT_TRUE(evens.contains(0));
  EXPECT_FALSE(evens.contains(7));
}

TEST(IndexSet, RedundantModulusCollapses) {
  const auto s = IndexSet::make_periodic(4, {0, 2});
  for (std::uint64_t n = 0; n <= 16; ++n) EXPECT_EQ(s.contains(n), n % 2 == 0) << n;
  EXPECT_EQ(s.modulus(), 2u);
  EXPECT_EQ(s.residues(), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(s, IndexSet::evens());
}

TEST(IndexSet, ModulusOneIsEverything) {
  const auto s = IndexSet::make_periodic(1, {0});
  EXPECT_TRUE(s.is_all());
  EXPECT_EQ(s, IndexSet::all());
}

TEST(IndexSet, BooleanExamples) {
  EXPECT_EQ(IndexSet::evens().complement(), IndexSet::odds());
  EXPECT_EQ(IndexSet::evens().unite(IndexSet::odds()), IndexSet::all());
  const auto s = IndexSet::make_periodic(3, {0}).intersect(IndexSet::make_periodic(2, {0}));
  for (std::uint64_t n = 0; n <= 36; ++n) EXPECT_EQ(s.contains(n), n % 6 == 0) << n;
  EXPECT_EQ(s, IndexSet::make_periodic(6, {0}));
}

TEST(IndexSet, SharpFiniteCofinite) {
  EXPECT_TRUE(IndexSet::evens().is_sharp());
  EXPECT_FALSE(IndexSet::all().is_sharp());
  const auto f = IndexSet::finite({1, 5});
  EXPECT_FALSE(f.is_sharp());
  EXPECT_TRUE(f.is_finite());
  EXPECT_TRUE(f.complement().is_cofinite());
  EXPECT_FALSE(IndexSet::evens().is_finite());
  EXPECT_FALSE(IndexSet::evens().is_cofinite());
  EXPECT_TRUE(f.contains(5));
  EXPECT_FALSE(f.contains(6));
}

TEST(IndexSet, ConstructorErrors) {
  EXPECT_THROW(IndexSet::make_periodic(2, {2}), Error);
  EXPECT_THROW(IndexSet::make_periodic(2, {0}, 4, {1}, {1}), Error);
  EXPECT_THROW(IndexSet::make_periodic(2, {0}, 2, {3}, {}), Error);
  EXPECT_THROW(IndexSet::make_periodic(0, {}), Error);
}

TEST(IndexSet, TextRoundTrip) {
  const auto s = IndexSet::parse("chi{m=2; T=[0]; N=0; in=[]; out=[]}");
  EXPECT_EQ(s, IndexSet::evens());
  EXPECT_EQ(s.to_string(), "chi{m=2;T=[0];N=0}");
  EXPECT_EQ(IndexSet::parse("chi{m=2;T=[1];N=0}"), IndexSet::odds());
  const auto f = IndexSet::finite({1, 5});
  EXPECT_EQ(f.to_string(), "chi{m=1;T=[];N=6;in=[1,5]}");
  EXPECT_EQ(IndexSet::parse(f.to_string()), f);
  EXPECT_EQ(IndexSet::parse(f.complement().to_string()), f.complement());
  EXPECT_THROW(IndexSet::parse("chi{m=2;T=[0"), Error);
  EXPECT_THROW(IndexSet::parse("chi{T=[0]}"), Error);
  EXPECT_THROW(IndexSet::parse("chi{m=2;T=[0];zz=1}"), Error);

  Sampler s_rng(11);
  for (int i = 0; i < kCases; ++i) {
    const auto x = s_rng.index_set(true);
    EXPECT_EQ(IndexSet::parse(x.to_string()), x) << x.to_string();
  }
}

TEST(IndexSetProperty, MembershipMatchesRawData) {
  Sampler s(1);
  for (int i = 0; i < kCases; ++i) {
    const RawSet raw = random_raw(s);
    const auto set = IndexSet::make_periodic(raw.m, raw.t, raw.n, raw.ins, raw.outs);
    const std::uint64_t bound = 8 * raw.m * std::max<std::uint64_t>(raw.n, 1);
    for (std::uint64_t k = 0; k <= bound; ++k) ASSERT_EQ(set.contains(k), raw.member(k)) << set.to_string() << " at " << k;
    ASSERT_EQ(raw.m % set.modulus(), 0u);
  }
}

TEST(IndexSetProperty, CanonicalizeIsIdempotent) {
  Sampler s(2);
  for (int i = 0; i < kCases; ++i) {
    const auto x = s.index_set(true);
    const auto again =
        IndexSet::make_periodic(x.modulus(), x.residues(), x.threshold(), x.exceptions_in(), x.exceptions_out());
    ASSERT_EQ(again, x);
  }
}

TEST(IndexSetProperty, BooleanAlgebraLaws) {
  Sampler s(3);
  for (int i = 0; i < kCases; ++i) {
    const auto a = s.index_set(true), b = s.index_set(true), c = s.index_set(true);
    ASSERT_EQ(a.unite(b).complement(), a.complement().intersect(b.complement()));
    ASSERT_EQ(a.intersect(b).complement(), a.complement().unite(b.complement()));
    ASSERT_EQ(a.unite(a), a);
    ASSERT_EQ(a.intersect(a), a);
    ASSERT_EQ(a.unite(a.intersect(b)), a);
    ASSERT_EQ(a.intersect(a.unite(b)), a);
    ASSERT_EQ(a.unite(b.intersect(c)), a.unite(b).intersect(a.unite(c)));
    ASSERT_EQ(a.complement().complement(), a);
    ASSERT_TRUE(a.unite(a.complement()).is_all());
    ASSERT_TRUE(a.intersect(a.complement()).is_empty());
  }
}

TEST(IndexSetProperty, SharpnessIsSymmetric) {
  Sampler s(4);
  for (int i = 0; i < kCases; ++i) {
    const auto a = s.index_set(true);
    ASSERT_EQ(a.is_sharp(), a.complement().is_sharp());
    if (a.is_sharp()) {
      ASSERT_FALSE(a.is_finite());
      ASSERT_FALSE(a.is_cofinite());
    }
  }
}
