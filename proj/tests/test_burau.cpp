#include <gtest/gtest.h>

#include "burau/burau.hpp"
#include "test_util.hpp"

using namespace burau;

namespace {

const LaurentPoly kOne = LaurentPoly::one();
const LaurentPoly kT = LaurentPoly::t();

BurauMatrix from_rows(Variant v, const std::vector<std::vector<std::string>>& rows) {
  BurauMatrix m(static_cast<int>(rows.size()), v);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = LaurentPoly::parse(rows[i][j]);
  return m;
}

// Inclusion of span{v_j - v_{j+1}} into the v basis, as an n x n matrix
// whose last column is zero.
BurauMatrix inclusion(int n) {
  BurauMatrix p(n, Variant::unreduced);
  for (int j = 0; j < n - 1; ++j) {
    p(j, j) = kOne;
    p(j + 1, j) = -kOne;
  }
  return p;
}

BurauMatrix padded(const BurauMatrix& r) {
  BurauMatrix m(r.size() + 1, Variant::unreduced);
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j) m(i, j) = r(i, j);
  return m;
}

}  // namespace

TEST(Burau, GeneratorMatrices) {
  EXPECT_EQ(generator_matrix(1, 1, 3, Variant::unreduced),
            from_rows(Variant::unreduced, {{"1 - t", "1", "0"}, {"t", "0", "0"}, {"0", "0", "1"}}));
  // s1(v1 - v2) = -t (v1 - v2), s1(v2 - v3) = (v1 - v2) + (v2 - v3)
  EXPECT_EQ(generator_matrix(1, 1, 3, Variant::reduced),
            from_rows(Variant::reduced, {{"-t", "1"}, {"0", "1"}}));
  EXPECT_EQ(generator_matrix(2, 1, 3, Variant::reduced),
            from_rows(Variant::reduced, {{"1", "0"}, {"t", "-t"}}));
  EXPECT_THROW(generator_matrix(3, 1, 3, Variant::reduced), std::out_of_range);
}

TEST(Burau, InverseLettersInvert) {
  for (int n = 2; n <= 7; ++n) {
    for (auto v : {Variant::unreduced, Variant::reduced}) {
      for (int i = 1; i < n; ++i) {
        ASSERT_TRUE((generator_matrix(i, 1, n, v) * generator_matrix(i, -1, n, v)).is_identity());
      }
    }
  }
}

TEST(Burau, BraidRelations) {
  for (int n = 3; n <= 7; ++n) {
    for (auto v : {Variant::unreduced, Variant::reduced}) {
      for (int i = 1; i + 1 < n; ++i) {
        ASSERT_EQ(burau_image(parse_word("s" + std::to_string(i) + " s" + std::to_string(i + 1) +
                                             " s" + std::to_string(i), n), v),
                  burau_image(parse_word("s" + std::to_string(i + 1) + " s" + std::to_string(i) +
                                             " s" + std::to_string(i + 1), n), v));
      }
      for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
          const auto a = BraidWord::generator(n, i);
          const auto b = BraidWord::generator(n, j);
          ASSERT_EQ(burau_image(a * b, v), burau_image(b * a, v));
        }
      }
    }
  }
}

TEST(Burau, Homomorphism) {
  for (int k = 0; k < 200; ++k) {
    const int n = test::uniform(2, 6);
    const auto a = test::random_word(n, 8);
    const auto b = test::random_word(n, 8);
    for (auto v : {Variant::unreduced, Variant::reduced}) {
      ASSERT_EQ(burau_image(a * b, v), burau_image(a, v) * burau_image(b, v));
    }
    ASSERT_TRUE(burau_image(a * a.inverse(), Variant::reduced).is_identity());
  }
}

TEST(Burau, ReducedIsRestrictionOfUnreduced) {
  for (int k = 0; k < 200; ++k) {
    const int n = test::uniform(2, 7);
    const auto w = test::random_word(n, 10);
    const auto u = burau_image(w, Variant::unreduced);
    const auto r = burau_image(w, Variant::reduced);
    ASSERT_EQ(u * inclusion(n), inclusion(n) * padded(r));
  }
}

TEST(Burau, DeterminantOfReducedImage) {
  for (int k = 0; k < 500; ++k) {
    const int n = test::uniform(2, 7);
    const auto w = test::random_word(n, test::uniform(0, 14));
    const int e = w.exponent_sum();
    const LaurentPoly expected = LaurentPoly::monomial(e % 2 ? -1 : 1, e);
    ASSERT_EQ(burau_image(w, Variant::reduced).determinant(), expected) << w.to_string();
  }
}

TEST(Burau, SpecializationIsPermutationMatrix) {
  for (int k = 0; k < 500; ++k) {
    const int n = test::uniform(2, 7);
    const auto w = test::random_word(n, test::uniform(0, 14));
    ASSERT_EQ(specialize_t1(burau_image(w, Variant::unreduced)),
              permutation_matrix(w.permutation()))
        << w.to_string();
  }
}

TEST(Burau, FullTwistIsScalar) {
  for (int n = 3; n <= 6; ++n) {
    BraidWord delta(n);
    for (int i = 1; i < n; ++i) delta.push_back({i, 1});
    const auto m = burau_image(delta.power(n), Variant::reduced);
    ASSERT_EQ(m, BurauMatrix::identity(n - 1, Variant::reduced).scaled(LaurentPoly::t(n)));
  }
}

TEST(Burau, ProductOrderMatters) {
  const auto w = parse_word("s1 s2", 3);
  EXPECT_EQ(burau_image(w, Variant::reduced, ProductOrder::reversed),
            burau_image(parse_word("s2 s1", 3), Variant::reduced));
  EXPECT_NE(burau_image(w, Variant::reduced), burau_image(parse_word("s2 s1", 3), Variant::reduced));
}

TEST(Burau, DeterminantOfKnownMatrix) {
  const auto m = from_rows(Variant::reduced, {{"1 - t", "t"}, {"2", "t^-1"}});
  EXPECT_EQ(m.determinant(), LaurentPoly::parse("1*t^-1 - 1*t^0 - 2*t^1"));
}
