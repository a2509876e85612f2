#include <gtest/gtest.h>

#include <limits>

#include "test_support.hpp"
#include "utid/oracle.hpp"

using namespace utid;
using utid::testing::UT;

TEST(BfsSearch, BasisQuadruple) {
  const GeneratorSet G{UT(1, 0, 0, 0, 0, 0), UT(0, 1, 0, 0, 0, 0), UT(0, 0, 1, 0, 0, 0), UT(-1, -1, -1, 0, 0, 0)};
  const SearchResult r = bfs_search(G, SearchBudget{6, 100000});
  ASSERT_TRUE(r.identity);
  EXPECT_EQ(r.identity->size(), 4u);
  EXPECT_EQ(product_of_word(G, *r.identity), Matrix::identity());
}

TEST(BfsSearch, DiagonalPairIsExhaustedWithoutHits) {
  const GeneratorSet G{UT(1, 1, 1, 0, 0, 0), UT(-1, -1, -1, 0, 0, 0)};
  const SearchResult r = bfs_search(G, SearchBudget{10, 100000});
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.depth, 10u);
  EXPECT_FALSE(r.identity);
  EXPECT_FALSE(r.u2);
  EXPECT_FALSE(r.u10);
}

TEST(BfsSearch, WitnessesMeetTargetsAndLengthsAreNested) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const GeneratorSet G = random_family_instance(static_cast<Family>(seed % 7), 1 + seed % 4, 2, seed);
    const SearchResult r = bfs_search(G, SearchBudget{6, 50000});
    for (Target t : {Target::identity, Target::u2, Target::u10})
      if (r[t]) EXPECT_TRUE(meets(product_of_word(G, *r[t]), t));
    if (r.identity) {
      ASSERT_TRUE(r.u2);
      EXPECT_LE(r.u2->size(), r.identity->size());
    }
    if (r.u2) {
      ASSERT_TRUE(r.u10);
      EXPECT_LE(r.u10->size(), r.u2->size());
    }
  }
}

TEST(BfsSearch, SingleTargetMatchesTripleSearch) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const GeneratorSet G = random_family_instance(Family::zero_sum_closed, 3, 2, seed);
    const SearchResult r = bfs_search(G, SearchBudget{6, 50000});
    const auto w = bfs_search(G, Target::u10, SearchBudget{6, 50000});
    ASSERT_EQ(w.has_value(), r.u10.has_value());
    if (w) EXPECT_EQ(w->size(), r.u10->size());
  }
}

TEST(BfsSearch, StateCapMakesSearchNonExhaustive) {
  const GeneratorSet G = random_instance(4, 3, 9);
  const SearchResult r = bfs_search(G, SearchBudget{10, 50});
  EXPECT_FALSE(r.exhaustive);
  EXPECT_LT(r.depth, 10u);
  EXPECT_THROW(bfs_search(G, SearchBudget{0, 10}), std::invalid_argument);
}

TEST(RandomInstance, DeterministicAndBounded) {
  const GeneratorSet x = random_instance(5, 3, 77), y = random_instance(5, 3, 77);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, random_instance(5, 3, 78));
  for (const auto& m : x)
    for (const BigInt* v : {&m.a, &m.b, &m.c, &m.d, &m.e, &m.f}) {
      EXPECT_LE(*v, 3);
      EXPECT_GE(*v, -3);
    }
  EXPECT_THROW(random_instance(0, 3, 1), std::invalid_argument);
  EXPECT_THROW(random_instance(2, 0, 1), std::invalid_argument);
}

TEST(RandomFamilyInstance, FamilyShapes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (const auto& m : random_family_instance(Family::kappa_zero, 3, 2, seed)) EXPECT_EQ(m.c, 0);
    for (const auto& m : random_family_instance(Family::b_zero, 3, 2, seed)) EXPECT_EQ(m.b, 0);
    for (const auto& m : random_family_instance(Family::alpha_zero, 3, 2, seed)) EXPECT_EQ(m.a, 0);
    for (const auto& m : random_family_instance(Family::u1_only, 3, 2, seed)) EXPECT_TRUE(in_u1(m));
    const GeneratorSet Z = random_family_instance(Family::zero_sum_closed, 4, 2, seed);
    Vec3<BigInt> sum(0, 0, 0);
    for (const auto& m : Z) sum += phi0(m);
    EXPECT_EQ(sum, Vec3<BigInt>(0, 0, 0));
    const GeneratorSet C = random_family_instance(Family::collinear, 4, 2, seed);
    IntMatrix P(3, 4);
    for (Eigen::Index j = 0; j < 4; ++j) P.col(j) = phi0(C[static_cast<std::size_t>(j)]);
    EXPECT_LE(rank(P), 1u);
  }
  EXPECT_STREQ(name(Family::kappa_zero), "kappa-zero");
}

TEST(SafeInt, ArithmeticAndOverflow) {
  const SafeInt big = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(SafeInt(2) * SafeInt(3) - SafeInt(1), SafeInt(5));
  EXPECT_EQ(-SafeInt(4), SafeInt(-4));
  EXPECT_THROW(big + SafeInt(1), std::overflow_error);
  EXPECT_THROW(big * SafeInt(2), std::overflow_error);
  EXPECT_THROW(SafeInt(std::numeric_limits<std::int64_t>::min()) - SafeInt(1), std::overflow_error);
}

TEST(BfsSearch, HugeEntriesOverflow) {
  const BigInt huge("4000000000000000000");
  Matrix m = UT(1, 1, 0, 0, 0, 0);
  m.d = huge;
  EXPECT_THROW(bfs_search(GeneratorSet{m, m}, SearchBudget{4, 1000}), std::overflow_error);
}

TEST(PropertyReport, LineFormat) {
  PropertyReport r{"reversal-negates-D-E", 10, 2, {5, 9}};
  EXPECT_EQ(r.line(), "reversal-negates-D-E 10 2 5 9");
  r.failures = 0;
  r.failing_seeds.clear();
  EXPECT_EQ(r.line(), "reversal-negates-D-E 10 0");
}

TEST(LemmaSuite, DeterministicAndGuarded) {
  const auto x = check_lemma_suite(3, 20), y = check_lemma_suite(3, 20);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i].line(), y[i].line());
  EXPECT_THROW(check_lemma_suite(3, 0), std::invalid_argument);
}
