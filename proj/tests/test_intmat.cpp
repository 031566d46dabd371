#include <gtest/gtest.h>

#include <random>

#include "quasichar/families.hpp"
#include "quasichar/intmat.hpp"
#include "quasichar/serialization.hpp"
#include "support/oracles.hpp"

using namespace quasichar;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Smith, Diagonal) {
  auto p = smith_profile(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(p.rank, 2u);
  EXPECT_EQ(p.divisors, big({1, 6}));
}

TEST(Smith, Identity) {
  auto p = smith_profile(IntMatrix::identity(3));
  EXPECT_EQ(p.rank, 3u);
  EXPECT_EQ(p.divisors, big({1, 1, 1}));
  EXPECT_EQ(p.top(), 1);
}

TEST(Smith, ZeroAndSingleColumn) {
  EXPECT_EQ(rank(IntMatrix(2, 2)), 0u);
  EXPECT_EQ(smith_profile(IntMatrix(2, 2)).top(), 1);
  auto p = smith_profile(IntMatrix::from_rows({{2}, {4}}));
  EXPECT_EQ(p.rank, 1u);
  EXPECT_EQ(p.divisors, big({2}));
}

TEST(Smith, MatchesMinorOracleOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 4;
    const IntMatrix a = oracles::random_matrix(rng, m, n, -5, 5, false);
    const auto p = smith_profile(a);
    const auto want = oracles::smith_by_minors(a);
    EXPECT_EQ(p.divisors, want) << to_string(a);
    EXPECT_EQ(p.rank, oracles::rank_over_q(a)) << to_string(a);
    EXPECT_EQ(smith_profile_bigint(a), p);
  }
}

TEST(Smith, Random3x4AgainstOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = oracles::random_matrix(rng, 3, 4, -5, 5, false);
    EXPECT_EQ(smith_profile(a).divisors, oracles::smith_by_minors(a)) << to_string(a);
  }
}

TEST(Smith, IndependentOfRowAndColumnOrder) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = oracles::random_matrix(rng, 3, 4, -4, 4, false);
    std::vector<std::size_t> perm{3, 1, 0, 2};
    const IntMatrix b = a.select_columns(perm);
    const IntMatrix c = b.transposed().select_columns(std::vector<std::size_t>{2, 0, 1}).transposed();
    EXPECT_EQ(smith_profile(a), smith_profile(c));
  }
}

TEST(Smith, OverflowFallsBackToBigIntegers) {
  const long big1 = 3037000499L;  // just under sqrt(2^63)
  IntMatrix a = IntMatrix::from_rows({{big1, big1 - 1}, {big1 + 1, big1}});
  const auto p = smith_profile(a);
  EXPECT_EQ(p, smith_profile_bigint(a));
  EXPECT_EQ(p.divisors, oracles::smith_by_minors(a));

  IntMatrix huge(2, 2);
  huge(0, 0) = BigInt("123456789012345678901234567890");
  huge(1, 1) = BigInt("987654321098765432109876543210");
  huge(0, 1) = 6;
  EXPECT_EQ(smith_profile(huge).divisors, oracles::smith_by_minors(huge));
}

TEST(Smith, GcdProduct) {
  SmithProfile p{2, big({1, 2})};
  EXPECT_EQ(p.gcd_product(1), 1);
  EXPECT_EQ(p.gcd_product(2), 2);
  SmithProfile q{2, big({1, 6})};
  EXPECT_EQ(q.gcd_product(4), 2);
}

TEST(Rank, PrintedE6MatrixHasFullRank) {
  const auto s = load_arrangement(QUASICHAR_TEST_DATA "/e6.txt");
  EXPECT_EQ(rank(s.matrix()), 6u);
}

TEST(IntMatrix, SelectTransposeAndInt64) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(a.select_columns(std::vector<std::size_t>{2, 0}), IntMatrix::from_rows({{3, 1}, {6, 4}}));
  EXPECT_EQ(a.transposed(), IntMatrix::from_rows({{1, 4}, {2, 5}, {3, 6}}));
  std::vector<std::int64_t> w;
  EXPECT_TRUE(a.to_int64(w));
  EXPECT_EQ(w, (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
  IntMatrix b(1, 1);
  b(0, 0) = BigInt("100000000000000000000");
  EXPECT_FALSE(b.to_int64(w));
}
