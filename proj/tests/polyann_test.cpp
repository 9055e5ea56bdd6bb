#include "colombeau/polyann.hpp"

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

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly k(std::size_t n, const GenNumber& c) { return MultiPoly::constant(n, c); }

MultiPoly random_poly(Sampler& s, std::size_t nvars, const GenNumber& mask, int max_terms = 3) {
  MultiPoly out(nvars);
  for (long t = s.uniform(1, max_terms); t > 0; --t) {
    Exponents e(nvars);
    for (auto& v : e) v = static_cast<unsigned>(s.uniform(0, 2));
    out = padd(out, MultiPoly::monomial(nvars, mask * s.gen_number(), std::move(e)));
  }
  return out;
}

// Independent iterated view: annihilator of f over R[x1..x_{n-1}] in x_n is
// the product of the annihilators of its coefficient polynomials.
GenNumber iterated_ann(const MultiPoly& f) {
  if (f.nvars() == 1) {
    GenNumber e = 1;
    for (const auto& c : f.coefficients()) e *= chi(c.zero_set());
    return e;
  }
  GenNumber e = 1;
  for (const auto& c : coefficients_in_last(f)) e *= iterated_ann(c);
  return e;
}

}  // namespace

TEST(Polyann, Arithmetic) {
  EXPECT_EQ(pmul(x(2, 0), x(2, 1)), MultiPoly::monomial(2, 1, {1, 1}));
  EXPECT_TRUE(pmul(scale(x(2, 0), kChiA), scale(x(2, 1), kChiAc)).is_zero());
  EXPECT_EQ(scale(padd(x(2, 0), x(2, 1)), alpha(1)), padd(scale(x(2, 0), alpha(1)), scale(x(2, 1), alpha(1))));
  EXPECT_EQ(to_string(scale(padd(x(2, 0), x(2, 1)), alpha(1))), "(eps^(1))*x2, (eps^(1))*x1");
  EXPECT_TRUE(psub(x(1, 0), x(1, 0)).is_zero());
  try {
    padd(x(1, 0), x(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(Polyann, AnnConstant) {
  const auto f = padd(k(2, kChiA), scale(pmul(x(2, 0), x(2, 1)), kChiA));
  EXPECT_EQ(ann_constant(f), kChiAc);
  EXPECT_EQ(ann_constant(padd(k(1, 1), x(1, 0))), GenNumber());
  const auto B = IndexSet::make_periodic(6, {1, 2, 3, 5});
  ASSERT_TRUE(kA.unite(B).is_all());
  EXPECT_EQ(ann_constant(padd(scale(x(2, 0), kChiA), scale(x(2, 1), chi(B)))), GenNumber());
  try {
    ann_constant(k(1, GenNumber::big_o(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InexactCoefficient);
  }
}

TEST(Polyann, VerifyAnnihilator) {
  EXPECT_TRUE(verify_annihilator(padd(k(1, kChiA), scale(x(1, 0), kChiA)), kChiAc, 50));
  EXPECT_FALSE(verify_annihilator(padd(k(1, 1), x(1, 0)), kChiA, 20));
  EXPECT_TRUE(verify_annihilator(MultiPoly(3), alpha(2), 5));
}

TEST(Polyann, OperatorObstruction) {
  const auto lf = scale(x(1, 0), kChiA);
  EXPECT_EQ(operator_obstruction(kChiAc, lf, k(1, 1)), Obstruction::Unsolvable);
  EXPECT_EQ(operator_obstruction(kChiAc, lf, k(1, kChiA)), Obstruction::NoVerdict);
  EXPECT_THROW(operator_obstruction(0, lf, k(1, 1)), Error);
  EXPECT_THROW(operator_obstruction(kChiA, lf, k(1, 1)), Error);
}

TEST(PolyannProperty, ZeroProductsHaveConstantAnnihilators) {
  Sampler s(501);
  for (int t = 0; t < 250; ++t) {
    const std::size_t n = s.chance(0.5) ? 2 : 3;
    // Split a random partition between f and g so that f g = 0.
    GenNumber mf = 0, mg = 0;
    auto parts = s.partition(4);
    for (std::size_t p = 0; p < parts.size(); ++p) (p % 2 == 0 ? mf : mg) += chi(parts[p]);
    if (mg == GenNumber()) std::swap(mf, mg);
    const auto f = random_poly(s, n, mf);
    auto g = random_poly(s, n, mg);
    if (g.is_zero()) g = k(n, mg);
    ASSERT_TRUE(pmul(f, g).is_zero());
    const auto b = ann_constant(f);
    ASSERT_NE(b, GenNumber());
    ASSERT_TRUE(verify_annihilator(f, b, 20, t));
  }
}

TEST(PolyannProperty, AnnihilatorIsMaximal) {
  Sampler s(502);
  for (int t = 0; t < 150; ++t) {
    const auto f = random_poly(s, 2, 1);
    const auto z = ann_constant(f).support();
    const auto lattice = testkit::atoms(f.coefficients());
    for (unsigned mask = 1; mask < (1u << lattice.size()); ++mask) {
      IndexSet S = IndexSet::none();
      for (std::size_t b = 0; b < lattice.size(); ++b)
        if (mask & (1u << b)) S = S.unite(lattice[b]);
      if (verify_annihilator(f, chi(S), 3, mask)) ASSERT_TRUE(S.subset_of(z));
    }
  }
}

TEST(PolyannProperty, CoefficientwiseMatchesSandwich) {
  Sampler s(503);
  int annihilating = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = s.uniform(1, 3);
    const auto mask = chi(s.index_set(false));
    const auto f = random_poly(s, n, mask);
    const auto b = s.chance(0.5) ? (1 - mask) * s.gen_number() : s.gen_number();
    bool coefficientwise = true;
    for (const auto& c : f.coefficients()) coefficientwise = coefficientwise && b * c == GenNumber();
    bool sandwich = true;
    for (int h = 0; h < 4; ++h) {
      const auto probe = h == 0 ? k(n, 1) : random_poly(s, n, 1);
      sandwich = sandwich && pmul(pmul(f, probe), k(n, b)).is_zero();
    }
    ASSERT_EQ(coefficientwise, sandwich);
    ASSERT_EQ(verify_annihilator(f, b, 5, t), coefficientwise);
    annihilating += coefficientwise;
  }
  EXPECT_GT(annihilating, 100);
}

TEST(PolyannProperty, IteratedVariablesAgree) {
  Sampler s(504);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = s.uniform(2, 3);
    const auto f = random_poly(s, n, chi(s.index_set(false)), 4);
    ASSERT_EQ(iterated_ann(f), ann_constant(f));
    ASSERT_EQ(ann_constant(embed(f, n + 1)), ann_constant(f));
  }
}
