#include <gtest/gtest.h>

#include "burau/braid.hpp"
#include "test_util.hpp"

using namespace burau;

TEST(Braid, ParseForms) {
  const auto w = parse_word("s1^2 s3^-1 s2", 4);
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.to_string(), "s1^2 s3^-1 s2");
  EXPECT_EQ(parse_word("-3 2 1 1 2", 4), parse_word("s3^-1 s2 s1^2 s2", 4));
  EXPECT_TRUE(parse_word("", 3).empty());
}

TEST(Braid, ParseErrors) {
  EXPECT_THROW(parse_word("s5", 5), std::out_of_range);
  EXPECT_THROW(parse_word("s0", 5), ParseError);
  EXPECT_THROW(parse_word("s1^0", 5), ParseError);
  EXPECT_THROW(parse_word("x1", 5), ParseError);
  EXPECT_THROW(parse_word("0", 5), ParseError);
  EXPECT_THROW(BraidWord(1), std::invalid_argument);
}

TEST(Braid, RoundTripOnRandomWords) {
  for (int k = 0; k < 500; ++k) {
    const int n = test::uniform(2, 7);
    const auto w = test::random_word(n, test::uniform(0, 30));
    ASSERT_EQ(parse_word(w.to_string(), n), w);
  }
}

TEST(Braid, InverseAndFreeReduction) {
  const auto w = parse_word("s1 s2 s2^-1 s3 s1^-1 s1", 4);
  EXPECT_EQ(w.free_reduced(), parse_word("s1 s3", 4));
  for (int k = 0; k < 200; ++k) {
    const auto u = test::random_word(5, 20);
    ASSERT_TRUE((u * u.inverse()).free_reduced().empty());
    ASSERT_EQ(u.inverse().inverse(), u);
  }
  EXPECT_THROW(BraidWord(3) * BraidWord(4), std::invalid_argument);
}

TEST(Braid, PermutationAndExponentSum) {
  EXPECT_EQ(parse_word("s1", 3).permutation(), Permutation({2, 1, 3}));
  // left action: s2 acts first, so 2 -> 3 -> 3 and 3 -> 2 -> 1
  const auto p = parse_word("s1 s2", 3).permutation();
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 3);
  EXPECT_EQ(p(3), 1);
  EXPECT_EQ(parse_word("s1^3 s2^-1", 3).exponent_sum(), 2);
  for (int k = 0; k < 200; ++k) {
    const auto a = test::random_word(6, 10);
    const auto b = test::random_word(6, 10);
    ASSERT_EQ((a * b).permutation(), a.permutation() * b.permutation());
  }
}

TEST(Braid, CommutatorIsFreelyReduced) {
  const auto a = parse_word("s1 s2", 4);
  const auto b = parse_word("s2^-1 s3", 4);
  const auto c = commutator(a, b);
  EXPECT_EQ(c, (a.inverse() * b.inverse() * a * b).free_reduced());
  EXPECT_EQ(c.exponent_sum(), 0);
  EXPECT_TRUE(c.permutation().is_identity() ||
              c.permutation() == (a.inverse() * b.inverse() * a * b).permutation());
  EXPECT_TRUE(commutator(a, a).empty());
}

TEST(Braid, Power) {
  const auto a = parse_word("s1 s2", 3);
  EXPECT_EQ(a.power(2), parse_word("s1 s2 s1 s2", 3));
  EXPECT_EQ(a.power(-1), a.inverse());
  EXPECT_TRUE(a.power(0).empty());
}
