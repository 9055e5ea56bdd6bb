#include "colombeau/expr.hpp"

#include <gtest/gtest.h>

#include "colombeau/error.hpp"
#include "random_values.hpp"

using namespace colombeau;
using colombeau::testkit::Sampler;

namespace {

const GenNumber kChiA = chi(IndexSet::evens());
const GenNumber kChiAc = chi(IndexSet::odds());

GenNumber scalar(std::string_view text) { return as_scalar(evaluate(text)); }
GenQuaternion quaternion(std::string_view text) { return as_quaternion(evaluate(text)); }

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(0, {});
}

}  // namespace

TEST(Expr, Trees) {
  const auto product = parse("alpha(3/2)*chi{m=2;T=[0];N=0}");
  EXPECT_EQ(product.kind, Node::Kind::Mul);
  EXPECT_EQ(product.children[0].kind, Node::Kind::Alpha);
  EXPECT_EQ(product.children[0].number, make_rational(3, 2));
  EXPECT_EQ(product.children[1].regions.front(), IndexSet::evens());
  EXPECT_EQ(parse("quat(1;1;0;0)").kind, Node::Kind::Quat);
  EXPECT_EQ(parse("-eps^(2)").kind, Node::Kind::Neg);
  EXPECT_EQ(parse("1 - 2 - 3").children[0].kind, Node::Kind::Sub);
}

TEST(Expr, SyntaxErrors) {
  const auto e = parse_error("1 + * 2");
  EXPECT_EQ(e.offset(), 4u);
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "number"), e.expected().end());
  EXPECT_EQ(parse_error("alpha(1").offset(), 7u);
  EXPECT_EQ(parse_error("2 * chi{m=2;T=[0;N=0}").offset(), 16u);
  EXPECT_EQ(parse_error("eps^(1/0)").offset(), 7u);
  EXPECT_EQ(parse_error("foo(1)").offset(), 0u);
  EXPECT_EQ(parse_error("1 2").offset(), 2u);
  EXPECT_EQ(parse_error("").offset(), 0u);
  EXPECT_EQ(parse_error("quat(1;2;3)").offset(), 10u);
  EXPECT_EQ(parse_error("x^(1/2)").offset(), 0u);
  EXPECT_EQ(parse_error("alpha(1)^(1/2)").offset(), 9u);
}

TEST(Expr, Semantics) {
  EXPECT_EQ(scalar("alpha(1)+alpha(1)"), 2 * alpha(1));
  EXPECT_EQ(to_string(evaluate("alpha(1)+alpha(1)")), "2*eps^(1)");
  EXPECT_EQ(scalar("-eps^(2)"), -alpha(2));
  EXPECT_EQ(scalar("2*3+4"), GenNumber(10));
  EXPECT_EQ(scalar("2^3^2"), GenNumber(64));
  EXPECT_EQ(scalar("-2^2"), GenNumber(-4));
  EXPECT_EQ(scalar("1/2 + 1/2"), GenNumber(1));
  EXPECT_EQ(scalar("eps"), alpha(1));
  EXPECT_EQ(scalar("eps^(-1/2)"), alpha(make_rational(-1, 2)));
  EXPECT_EQ(scalar("(1+I)*(1-I)"), GenNumber(2));
  EXPECT_EQ(scalar("1/alpha(3)"), alpha(-3));
  EXPECT_EQ(scalar("O(eps^(3)) + eps"), alpha(1) + GenNumber::big_o(3));
  EXPECT_EQ(scalar("piece[chi{m=2;T=[0];N=0}: eps; chi{m=2;T=[1];N=0}: 3]"), kChiA * alpha(1) + 3 * kChiAc);
  EXPECT_EQ(scalar("abs(-2*eps)"), 2 * alpha(1));
  EXPECT_EQ(scalar("sqrt(4*eps^(2))"), 2 * alpha(1));
  EXPECT_EQ(scalar("conj(2+3*I)"), GenNumber::constant(Coefficient(2, -3)));
  EXPECT_EQ(scalar("normsq(quat(1;1;0;0))"), GenNumber(2));
  EXPECT_EQ(scalar("normsq(3*I)"), GenNumber(9));
  EXPECT_EQ(quaternion("i*j"), GenQuaternion::k());
  EXPECT_EQ(quaternion("j*i"), -GenQuaternion::k());
  EXPECT_EQ(quaternion("1/(1+i)"), GenNumber::constant(make_rational(1, 2)) * (GenQuaternion(1) - GenQuaternion::i()));
  EXPECT_EQ(quaternion("chi{m=2;T=[0];N=0}*quat(3;4;0;0)"), kChiA * GenQuaternion(3, 4, 0, 0));
  EXPECT_EQ(scalar("abs(quat(3;4;0;0))"), GenNumber(5));
}

TEST(Expr, EvaluationErrors) {
  auto kind = [](std::string_view text) {
    try {
      evaluate(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind("1/chi{m=2;T=[0];N=0}"), ErrorKind::NotAUnit);
  EXPECT_EQ(kind("quat(I;0;0;0)"), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind("I*i"), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind("sqrt(-1)"), ErrorKind::NotQPositive);
  EXPECT_EQ(kind("sqrt(2)"), ErrorKind::IrrationalLeadingCoefficient);
  EXPECT_THROW(evaluate("piece[chi{m=2;T=[0];N=0}: 1]"), Error);
  EXPECT_THROW(evaluate("piece[chi{m=1;T=[0];N=0}: 1; chi{m=2;T=[0];N=0}: 2]"), Error);
  EXPECT_THROW(as_scalar(evaluate("i")), Error);
}

TEST(ExprProperty, ScalarRoundTrip) {
  Sampler s(601);
  for (int t = 0; t < 500; ++t) {
    testkit::Shape shape;
    shape.field = s.chance(0.3) ? Field::Complex : Field::Real;
    GenNumber x = s.gen_number(shape);
    if (s.chance(0.3)) x += chi(s.index_set(false), shape.field) * GenNumber::big_o(s.uniform(0, 6)).to_field(shape.field);
    const std::string text = to_string(x);
    const auto back = as_scalar(evaluate(text));
    ASSERT_EQ(back, x) << text;
    ASSERT_EQ(to_string(back), text);
  }
}

TEST(ExprProperty, QuaternionRoundTrip) {
  Sampler s(602);
  for (int t = 0; t < 300; ++t) {
    const auto x = s.quaternion();
    const std::string text = to_string(x);
    ASSERT_EQ(as_quaternion(evaluate(text)), x) << text;
  }
}
