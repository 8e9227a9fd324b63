#include <map>

#include <gtest/gtest.h>

#include "burau/laurent.hpp"
#include "test_util.hpp"

using namespace burau;
using burau::test::random_poly;

namespace {

// Schoolbook product over a map, independent of the library's kernels.
LaurentPoly naive_product(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
  std::vector<LaurentPoly::Term> terms(acc.begin(), acc.end());
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST(Laurent, TextRoundTrip) {
  const auto p = LaurentPoly::parse("-1*t^-3 + 2*t^0 + 1*t^5");
  EXPECT_EQ(p.to_string(), "-1*t^-3 + 2*t^0 + 1*t^5");
  EXPECT_EQ(p.coefficient(-3), -1);
  EXPECT_EQ(p.coefficient(1), 0);
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly::parse("0"), LaurentPoly());
  EXPECT_EQ(LaurentPoly::parse("t"), LaurentPoly::t());
  EXPECT_EQ(LaurentPoly::parse("-t^-2 + 3"), LaurentPoly::monomial(-1, -2) + LaurentPoly(3));
}

TEST(Laurent, ParseRejectsGarbage) {
  EXPECT_THROW(LaurentPoly::parse("1*x^2"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("2*t^"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("+ +"), ParseError);
}

TEST(Laurent, SmallProducts) {
  const auto one = LaurentPoly::one();
  const auto t = LaurentPoly::t();
  EXPECT_EQ((one - t) * (one + t), one - LaurentPoly::t(2));
  EXPECT_EQ(LaurentPoly::t(7) * LaurentPoly::t(-7), one);
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_EQ((one - t).mirrored(), one - LaurentPoly::t(-1));
}

TEST(Laurent, ZeroHasNoDegree) {
  EXPECT_THROW((void)LaurentPoly().min_exponent(), std::domain_error);
  EXPECT_THROW((void)LaurentPoly().max_exponent(), std::domain_error);
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_poly(6, 20, 128);
    const auto b = random_poly(6, 20, 128);
    const auto c = random_poly(6, 20, 128);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, LaurentPoly());
    ASSERT_EQ(a * LaurentPoly::one(), a);
    ASSERT_EQ(a * b, naive_product(a, b));
  }
}

TEST(Laurent, WideSpreadUsesSparsePath) {
  const auto a = LaurentPoly::t(-100000) + LaurentPoly::t(100000);
  const auto b = LaurentPoly::t(3) - LaurentPoly::one();
  EXPECT_EQ(a * b, naive_product(a, b));
}

TEST(Laurent, EvaluationIsAHomomorphism) {
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(5, 6, 64);
    const auto b = random_poly(5, 6, 64);
    for (int v : {-3, -1, 1, 2, 5}) {
      ASSERT_EQ((a * b).evaluate(v), a.evaluate(v) * b.evaluate(v));
      ASSERT_EQ((a + b).evaluate(v), a.evaluate(v) + b.evaluate(v));
    }
  }
  EXPECT_EQ(LaurentPoly::parse("1*t^-1 + 1*t^1").evaluate(2), Rational(5, 2));
  EXPECT_THROW((void)LaurentPoly::one().evaluate(0), std::domain_error);
}

TEST(Laurent, ExactDivision) {
  for (int k = 0; k < 300; ++k) {
    const auto q = random_poly(5, 8, 96);
    auto d = random_poly(4, 4, 32);
    if (d.is_zero()) d = LaurentPoly::one() - LaurentPoly::t();
    ASSERT_EQ((q * d).divided_by(d), q);
  }
  const auto one = LaurentPoly::one();
  EXPECT_THROW((void)(one + LaurentPoly::t(2)).divided_by(one - LaurentPoly::t()),
               std::domain_error);
  EXPECT_THROW((void)one.divided_by(LaurentPoly()), std::domain_error);
}

TEST(Laurent, UnitNormalization) {
  const auto p = LaurentPoly::parse("-2*t^3 + 1*t^5");
  const auto u = unit_normalize(p);
  EXPECT_EQ(u.shift, 3);
  EXPECT_EQ(u.sign, -1);
  EXPECT_EQ(u.poly, LaurentPoly::parse("2 - 1*t^2"));
  EXPECT_TRUE(unit_equivalent(p, -p.shifted(-11)));
  EXPECT_FALSE(unit_equivalent(p, p.mirrored()));
  EXPECT_TRUE(unit_equivalent(LaurentPoly(), LaurentPoly()));
}
