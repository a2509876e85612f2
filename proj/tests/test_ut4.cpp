#include <gtest/gtest.h>

#include "test_support.hpp"
#include "utid/ut4.hpp"

using namespace utid;
using utid::testing::dense_product;
using utid::testing::UT;

TEST(Multiply, IdentityIsNeutral) {
  const Matrix M = UT(1, 2, 3, 4, 5, 6);
  EXPECT_EQ(Matrix::identity() * M, M);
  EXPECT_EQ(M * Matrix::identity(), M);
}

TEST(Multiply, TwoElementaryMatrices) { EXPECT_EQ(UT(1, 0, 0, 0, 0, 0) * UT(0, 1, 0, 0, 0, 0), UT(1, 1, 0, 1, 0, 0)); }

TEST(Multiply, AgreesWithDenseProduct) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Matrix x = utid::testing::random_matrix(rng, 5), y = utid::testing::random_matrix(rng, 5);
    EXPECT_EQ(to_dense(mul(x, y)), (to_dense(x) * to_dense(y)).eval());
  }
}

TEST(Inverse, GroupLaw) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const Matrix M = utid::testing::random_matrix(rng, 6);
    EXPECT_EQ(M * inverse(M), Matrix::identity());
    EXPECT_EQ(inverse(M) * M, Matrix::identity());
  }
}

TEST(Power, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Matrix M = utid::testing::random_matrix(rng, 3);
    Matrix acc;
    for (std::uint64_t n = 0; n < 12; ++n) {
      EXPECT_EQ(power(M, n), acc);
      acc = acc * M;
    }
  }
}

TEST(ClosedForm, AgreesWithFold) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    std::vector<Matrix> xs;
    const int m = 1 + i % 7;
    Matrix fold;
    for (int j = 0; j < m; ++j) {
      xs.push_back(utid::testing::random_matrix(rng, 4));
      fold = fold * xs.back();
    }
    EXPECT_EQ(product_closed_form<BigInt>(xs), fold);
  }
}

TEST(Dense, RoundTrip) {
  const Matrix M = UT(1, -2, 3, -4, 5, -6);
  EXPECT_EQ(from_dense(to_dense(M)), M);
  auto D = to_dense(M);
  D(1, 0) = 1;
  EXPECT_THROW(from_dense(D), std::invalid_argument);
  D = to_dense(M);
  D(2, 2) = 2;
  EXPECT_THROW(from_dense(D), std::invalid_argument);
}

TEST(AntiInvolution, Examples) {
  EXPECT_EQ(anti_involution(Matrix::identity()), Matrix::identity());
  EXPECT_EQ(anti_involution(UT(1, 2, 3, 4, 5, 6)), UT(3, 2, 1, 5, 4, 6));
}

TEST(AntiInvolution, ReversesProductsAndSquaresToIdentity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Matrix x = utid::testing::random_matrix(rng, 4), y = utid::testing::random_matrix(rng, 4);
    EXPECT_EQ(anti_involution(x * y), anti_involution(y) * anti_involution(x));
    EXPECT_EQ(anti_involution(anti_involution(x)), x);
    // Coarse subgroup classes are preserved.
    EXPECT_EQ(in_u1(anti_involution(x)), in_u1(x));
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(UT(0, 0, 0, 0, 0, 5)), SubgroupClass::U2);
  EXPECT_EQ(classify(UT(0, 0, 0, 0, 3, 5)), SubgroupClass::U10);
  EXPECT_EQ(classify(UT(0, 0, 0, 1, 3, 5)), SubgroupClass::U1);
  EXPECT_EQ(classify(UT(0, 1, 0, 0, 0, 0)), SubgroupClass::General);
  EXPECT_EQ(classify(Matrix::identity()), SubgroupClass::Identity);
}

TEST(Classify, TargetsAreNested) {
  for (auto c : {SubgroupClass::General, SubgroupClass::U1, SubgroupClass::U10, SubgroupClass::U2,
                 SubgroupClass::Identity}) {
    if (meets(c, Target::identity)) EXPECT_TRUE(meets(c, Target::u2));
    if (meets(c, Target::u2)) EXPECT_TRUE(meets(c, Target::u10));
  }
  EXPECT_FALSE(meets(SubgroupClass::U1, Target::u10));
  EXPECT_TRUE(meets(SubgroupClass::U10, Target::u10));
  EXPECT_FALSE(meets(SubgroupClass::U10, Target::u2));
}

TEST(Homomorphisms, Phi0Phi1Tau) {
  EXPECT_EQ(phi0(UT(1, 2, 3, 4, 5, 6)), Vec3<BigInt>(1, 2, 3));
  EXPECT_EQ(tau(UT(0, 0, 0, 4, 5, 6)), Vec3<BigInt>(4, 5, 6));
  EXPECT_EQ(phi1(UT(0, 0, 0, 4, 5, 6)), Vec2<BigInt>(4, 5));
  try {
    tau(UT(1, 0, 0, 0, 0, 0));
    FAIL() << "expected std::domain_error";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "not in U1");
  }
  EXPECT_THROW(phi1(UT(0, 0, 1, 0, 0, 0)), std::domain_error);
}

TEST(Homomorphisms, Phi0IsAdditiveAndTauIsAdditiveOnU1) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Matrix x = utid::testing::random_matrix(rng, 4), y = utid::testing::random_matrix(rng, 4);
    EXPECT_EQ(phi0(x * y), Vec3<BigInt>(phi0(x) + phi0(y)));
    const Matrix u = UT(0, 0, 0, x.d.convert_to<long>(), x.e.convert_to<long>(), x.f.convert_to<long>());
    const Matrix v = UT(0, 0, 0, y.d.convert_to<long>(), y.e.convert_to<long>(), y.f.convert_to<long>());
    EXPECT_EQ(tau(u * v), Vec3<BigInt>(tau(u) + tau(v)));
    EXPECT_EQ(u * v, v * u);
  }
}

TEST(ProductOfWord, SingleLetter) {
  const std::vector<Matrix> G{UT(1, 2, 3, 4, 5, 6), UT(0, 1, 0, 0, 0, 0)};
  EXPECT_EQ(product_of_word(G, Word{1}), G[1]);
}

TEST(ProductOfWord, BasisVectorsAndTheirNegatedSum) {
  const std::vector<Matrix> G{UT(1, 0, 0, 0, 0, 0), UT(0, 1, 0, 0, 0, 0), UT(0, 0, 1, 0, 0, 0), UT(-1, -1, -1, 0, 0, 0)};
  EXPECT_EQ(product_of_word(G, Word{0, 1, 2, 3}), Matrix::identity());
}

TEST(ProductOfWord, AgreesWithDenseProduct) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Matrix> G;
    for (int j = 0; j < 3; ++j) G.push_back(utid::testing::random_matrix(rng, 3));
    Word w;
    for (int j = 0; j < 1 + i % 9; ++j) w.push_back(static_cast<std::size_t>(rng() % 3));
    EXPECT_EQ(to_dense(product_of_word(G, w)), dense_product(G, w));
  }
}

TEST(ProductOfWord, Errors) {
  const std::vector<Matrix> G{UT(1, 0, 0, 0, 0, 0)};
  EXPECT_THROW(product_of_word(G, Word{}), std::invalid_argument);
  EXPECT_THROW(product_of_word(G, Word{1}), std::out_of_range);
}

TEST(Words, ExponentVectorAndSortedWord) {
  const Word w{2, 0, 2, 1, 2};
  const auto ell = exponent_vector(w, 4);
  EXPECT_EQ(ell, (std::vector<BigInt>{1, 1, 3, 0}));
  EXPECT_EQ(sorted_word(ell), (Word{0, 1, 2, 2, 2}));
}

TEST(Words, AppendPowerRefusesHugeWords) {
  Word w;
  append_power(w, Word{0, 1}, BigInt(3));
  EXPECT_EQ(w, (Word{0, 1, 0, 1, 0, 1}));
  Word big;
  EXPECT_THROW(append_power(big, Word{0, 1}, BigInt(kMaxWordLength)), std::length_error);
}

TEST(Permutations, AllPermutationsAndReversal) {
  const auto ps = all_permutations(4);
  EXPECT_EQ(ps.size(), 24u);
  for (const auto& p : ps) {
    EXPECT_TRUE(p.valid());
    EXPECT_EQ(p.reversed().reversed(), p);
  }
  EXPECT_EQ(Permutation::identity(3).reversed().map, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(leading_pair(4, 2, 0).map, (std::vector<std::size_t>{2, 0, 1, 3}));
}

TEST(Permutations, PumpedWord) {
  const std::vector<Word> parts{Word{0}, Word{1, 2}};
  Permutation s;
  s.map = {1, 0};
  EXPECT_EQ(pumped_word(parts, s, BigInt(2)), (Word{1, 2, 1, 2, 0, 0}));
}
