#include <gtest/gtest.h>

#include "test_support.hpp"
#include "utid/stats.hpp"

using namespace utid;
using utid::testing::UT;

namespace {

using RatDense = Eigen::Matrix<Rational, 4, 4>;

// log(B) = N - N^2/2 + N^3/3 with N = B - I (N^4 = 0).
RatDense matrix_log(const Matrix& m) {
  RatDense N = to_dense(m).cast<Rational>();
  N -= RatDense::Identity();
  const RatDense N2 = N * N;
  const RatDense N3 = N2 * N;
  return N - N2 / Rational(2) + N3 / Rational(3);
}

Matrix repeated(const std::vector<Matrix>& B, const Permutation& s, long t) {
  Matrix acc;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (long r = 0; r < t; ++r) acc = acc * B[s[i]];
  return acc;
}

std::vector<Matrix> zero_sum(std::mt19937_64& rng, std::size_t m, long bound) {
  std::vector<Matrix> B;
  for (std::size_t i = 0; i < m; ++i) B.push_back(utid::testing::random_matrix(rng, bound));
  B.back().a = B.back().b = B.back().c = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    B.back().a -= B[i].a;
    B.back().b -= B[i].b;
    B.back().c -= B[i].c;
  }
  return B;
}

}  // namespace

TEST(ElementStats, Identity) {
  const ElementStats s = element_stats(Matrix::identity());
  EXPECT_EQ(s.D, 0);
  EXPECT_EQ(s.E, 0);
  EXPECT_EQ(s.F, 0);
}

TEST(ElementStats, OnlyD) {
  const ElementStats s = element_stats(UT(0, 0, 0, 1, 0, 0));
  EXPECT_EQ(s.D, 1);
  EXPECT_EQ(s.E, 0);
  EXPECT_EQ(s.F, 0);
}

TEST(ElementStats, AllOnesUpperDiagonal) {
  const ElementStats s = element_stats(UT(1, 1, 1, 0, 0, 0));
  EXPECT_EQ(s.D, Rational(-1, 2));
  EXPECT_EQ(s.E, Rational(-1, 2));
  EXPECT_EQ(s.F, Rational(1, 3));
}

TEST(ElementStats, AgreeWithMatrixLogarithm) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Matrix m = utid::testing::random_matrix(rng, 5);
    const RatDense L = matrix_log(m);
    const ElementStats s = element_stats(m);
    EXPECT_EQ(s.D, L(0, 2));
    EXPECT_EQ(s.E, L(1, 3));
    EXPECT_EQ(s.F, L(0, 3));
  }
}

TEST(SigmaStats, ZeroBGivesZeroD) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    auto B = zero_sum(rng, 4, 3);
    for (auto& x : B) x.b = 0;
    for (const auto& s : all_permutations(4)) EXPECT_EQ(sigma_stats(B, s).D, 0);
  }
}

TEST(SigmaStats, InversePairHasZeroD) {
  const std::vector<Matrix> B{UT(1, 1, 0, 0, 0, 0), UT(-1, -1, 0, 0, 0, 0)};
  EXPECT_EQ(sigma_stats(B, Permutation::identity(2)).D, 0);
}

TEST(SigmaStats, ReversalNegatesDAndE) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto B = zero_sum(rng, 2 + i % 5, 3);
    Permutation s = Permutation::identity(B.size());
    std::shuffle(s.map.begin(), s.map.end(), rng);
    const SigmaStats x = sigma_stats(B, s), y = sigma_stats(B, s.reversed());
    EXPECT_EQ(y.D, -x.D);
    EXPECT_EQ(y.E, -x.E);
  }
}

TEST(PumpedProduct, ZeroExponentIsIdentity) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 20; ++i) {
    std::vector<Matrix> B{utid::testing::random_matrix(rng, 3), utid::testing::random_matrix(rng, 3)};
    EXPECT_EQ(pumped_product(B, Permutation::identity(2), BigInt(0)), Matrix::identity());
  }
}

TEST(PumpedProduct, UnitExponentIsTheProduct) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 50; ++i) {
    std::vector<Matrix> B;
    for (int j = 0; j < 4; ++j) B.push_back(utid::testing::random_matrix(rng, 3));
    EXPECT_EQ(pumped_product(B, Permutation::identity(4), BigInt(1)), product_of_word(B, Word{0, 1, 2, 3}));
  }
}

TEST(PumpedProduct, AgreesWithRepeatedMultiplication) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 300; ++i) {
    std::vector<Matrix> B;
    const std::size_t m = 1 + i % 4;
    for (std::size_t j = 0; j < m; ++j) B.push_back(utid::testing::random_matrix(rng, 3));
    Permutation s = Permutation::identity(m);
    std::shuffle(s.map.begin(), s.map.end(), rng);
    const long t = i % 6;
    EXPECT_EQ(pumped_product(B, s, BigInt(t)), repeated(B, s, t));
  }
}

TEST(PumpedProduct, LargeExponentAgreesWithFastPower) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 30; ++i) {
    std::vector<Matrix> B{utid::testing::random_matrix(rng, 3), utid::testing::random_matrix(rng, 3),
                          utid::testing::random_matrix(rng, 3)};
    const std::uint64_t t = 1000003;
    const Matrix expected = power(B[2], t) * power(B[0], t) * power(B[1], t);
    Permutation s;
    s.map = {2, 0, 1};
    EXPECT_EQ(pumped_product(B, s, BigInt(t)), expected);
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(Vec3<BigInt>(1, 1, 1), UT(1, 1, 1, 0, 0, 0)), 0);
  EXPECT_EQ(gamma(Vec3<BigInt>(1, 0, 0), UT(1, 0, 0, 0, 1, 0)), 1);
  EXPECT_EQ(gamma(Vec3<BigInt>(0, 1, 2), UT(0, 1, 2, 3, 4, 0)), -6);
}
