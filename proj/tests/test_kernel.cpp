#include <gtest/gtest.h>

#include "burau/kernel.hpp"
#include "test_util.hpp"

using namespace burau;

TEST(Kernel, BoundaryTwistWord) {
  EXPECT_EQ(boundary_twist_word(5), parse_word("s4 s3 s2 s1^2 s2 s3 s4", 5));
  EXPECT_EQ(boundary_twist_word(5).size(), 8u);
  EXPECT_EQ(boundary_twist_word(3), parse_word("s2 s1^2 s2", 3));
  for (int n = 3; n <= 7; ++n) EXPECT_TRUE(boundary_twist_word(n).permutation().is_identity());
  EXPECT_THROW(boundary_twist_word(2), std::invalid_argument);
}

TEST(Kernel, ConjugatedTwist) {
  const auto psi1 = parse_word("s3^-1 s2 s1^2 s2 s4^3 s3 s2", 5);
  const auto tau = conjugated_twist({psi1, BraidWord::generator(5, 4)});
  EXPECT_EQ(tau, psi1.inverse() * BraidWord::generator(5, 4) * psi1);
  EXPECT_EQ(tau.size(), 21u);
  EXPECT_EQ(conjugated_twist({BraidWord(5), boundary_twist_word(5)}), boundary_twist_word(5));
  EXPECT_THROW(conjugated_twist({BraidWord(4), boundary_twist_word(5)}), std::invalid_argument);
}

TEST(Kernel, BuiltInFiveStrandElement) {
  const auto w = paper_kernel_element(5);
  // free cancellation at the junction inside the second twist removes 4 letters
  EXPECT_EQ(paper_kernel_naive_length(5), 122u);
  EXPECT_EQ(w.size(), 118u);
  EXPECT_EQ(w.exponent_sum(), 0);
  const auto r = verify_kernel(w);
  EXPECT_TRUE(r.burau_trivial);
  EXPECT_FALSE(r.artin_trivial);
  EXPECT_TRUE(r.certified());
  EXPECT_TRUE(r.permutation.is_identity());
  EXPECT_EQ(r.letter_count, 118u);
}

TEST(Kernel, BuiltInSixStrandElement) {
  const auto w = paper_kernel_element(6);
  EXPECT_EQ(w.size(), 44u);
  EXPECT_EQ(paper_kernel_naive_length(6), 44u);
  const auto r = verify_kernel(w);
  EXPECT_TRUE(r.certified());
  EXPECT_EQ(r.exponent_sum, 0);
  EXPECT_THROW(paper_kernel_element(4), std::invalid_argument);
}

TEST(Kernel, UnreducedImageIsAlsoTrivial) {
  EXPECT_TRUE(burau_image(paper_kernel_element(5), Variant::unreduced).is_identity());
  EXPECT_TRUE(burau_image(paper_kernel_element(6), Variant::unreduced).is_identity());
}

TEST(Kernel, GeneratorIsNotInKernel) {
  const auto r = verify_kernel(BraidWord::generator(5, 1));
  EXPECT_FALSE(r.burau_trivial);
  EXPECT_FALSE(r.artin_trivial);
  EXPECT_FALSE(r.certified());
  const auto e = verify_kernel(BraidWord(5));
  EXPECT_TRUE(e.burau_trivial);
  EXPECT_TRUE(e.artin_trivial);
  EXPECT_FALSE(e.certified());
}

TEST(Kernel, CommutingCheck) {
  for (int n : {5, 6}) {
    const auto tw = paper_twists(n);
    EXPECT_TRUE(commuting_check(tw.a, tw.b)) << n;
  }
  EXPECT_FALSE(commuting_check(BraidWord::generator(3, 1), BraidWord::generator(3, 2)));
  EXPECT_TRUE(commuting_check(BraidWord::generator(5, 1), BraidWord::generator(5, 3)));
  EXPECT_THROW(commuting_check(BraidWord(4), BraidWord(5)), std::invalid_argument);
}

TEST(Kernel, CommutingMatchesBurauTrivialCommutator) {
  for (int k = 0; k < 300; ++k) {
    const int n = test::uniform(3, 5);
    const auto a = conjugated_twist({test::random_word(n, 3), BraidWord::generator(n, 1)});
    const auto b = n > 3 && test::uniform(0, 1) ? boundary_twist_word(n)
                                                   : test::random_word(n, 2);
    ASSERT_EQ(commuting_check(a, b), verify_kernel(commutator(a, b)).burau_trivial);
  }
  const auto tw = paper_twists(5);
  EXPECT_EQ(commuting_check(tw.a, tw.b), verify_kernel(commutator(tw.a, tw.b)).burau_trivial);
}

TEST(Kernel, ConjugationInvariance) {
  for (int n : {5, 6}) {
    const auto w = paper_kernel_element(n);
    for (int k = 0; k < 10; ++k) {
      const auto g = test::random_word(n, 12);
      const auto r = verify_kernel((g.inverse() * w * g).free_reduced());
      ASSERT_TRUE(r.burau_trivial);
      ASSERT_FALSE(r.artin_trivial);
    }
  }
  for (int k = 0; k < 50; ++k) {
    const auto w = test::random_word(4, 6);
    const auto g = test::random_word(4, 6);
    const auto a = verify_kernel(w);
    const auto b = verify_kernel(g.inverse() * w * g);
    ASSERT_EQ(a.burau_trivial, b.burau_trivial);
    ASSERT_EQ(a.artin_trivial, b.artin_trivial);
  }
}
