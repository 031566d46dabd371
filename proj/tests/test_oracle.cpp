#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quasichar/errors.hpp"
#include "quasichar/families.hpp"
#include "quasichar/oracle.hpp"
#include "quasichar/quasipoly.hpp"
#include "support/oracles.hpp"

using namespace quasichar;

namespace {

const IntMatrix kB2 = IntMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_EQ(count_complement(Arrangement(IntMatrix::from_rows({{1}})), 5), 4u);
  EXPECT_EQ(count_complement(Arrangement(kB2), 3), 0u);
  const auto m4 = midhyperplane(4);
  EXPECT_EQ(count_complement(m4, 5), 0u);
  EXPECT_EQ(count_complement(m4, 7), 336u);
  EXPECT_EQ(count_complement(m4, 1), 0u);
}

TEST(Oracle, MatchesNaiveCount) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 5;
    const IntMatrix s = oracles::random_matrix(rng, m, n, -5, 5);
    for (std::uint64_t q : {1, 2, 3, 4, 6, 7, 9})
      EXPECT_EQ(count_complement(Arrangement(s), q), oracles::count_points(s, q)) << to_string(s) << " q=" << q;
  }
}

TEST(Oracle, AgreesWithQuasiPolynomials) {
  const auto m4 = midhyperplane(4);
  const auto chi = characteristic_quasipolynomial(m4);
  for (std::uint64_t q = 1; q <= 12; ++q) EXPECT_EQ(from_u64(count_complement(m4, q)), evaluate(chi, q));
  for (const auto& a : {Arrangement(kB2), root_system_spec('A', 3).arrangement()}) {
    const auto c = characteristic_quasipolynomial(a);
    for (std::uint64_t q = 1; q <= 15; ++q) EXPECT_EQ(from_u64(count_complement(a, q)), evaluate(c, q));
  }
}

TEST(Oracle, Invariances) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = 2 + rng() % 2, n = 2 + rng() % 3;
    const IntMatrix s = oracles::random_matrix(rng, m, n, -3, 3);
    const Arrangement a(s);

    IntMatrix neg = s;
    for (std::size_t r = 0; r < m; ++r) neg(r, n - 1) = -neg(r, n - 1);

    std::vector<std::size_t> dup_cols(n);
    std::iota(dup_cols.begin(), dup_cols.end(), 0);
    dup_cols.push_back(0);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    IntMatrix unimodular = s;  // row_0 += 2 row_1, then swap rows
    for (std::size_t c = 0; c < n; ++c) unimodular(0, c) += 2 * s(1, c);
    for (std::size_t c = 0; c < n; ++c) std::swap(unimodular(0, c), unimodular(1, c));

    for (std::uint64_t q = 1; q <= 10; ++q) {
      const auto want = count_complement(a, q);
      EXPECT_EQ(count_complement(Arrangement(neg), q), want);
      EXPECT_EQ(count_complement(Arrangement(s.select_columns(dup_cols)), q), want);
      EXPECT_EQ(count_complement(Arrangement(s.select_columns(perm)), q), want);
      EXPECT_EQ(count_complement(Arrangement(unimodular), q), want);
    }
  }
}

TEST(Oracle, LargeEntriesReduceCorrectly) {
  IntMatrix s(2, 2);
  s(0, 0) = BigInt("1000000000000000000001");
  s(1, 0) = -7;
  s(0, 1) = 3;
  s(1, 1) = BigInt("-99999999999999999999");
  for (std::uint64_t q : {2, 5, 11, 13}) EXPECT_EQ(count_complement(Arrangement(s), q), oracles::count_points(s, q));
}

TEST(Oracle, BudgetAndRange) {
  OracleOptions o;
  o.point_budget = 1000;
  EXPECT_THROW(count_complement(midhyperplane(4), 7, o), ResourceError);
  EXPECT_NO_THROW(count_complement(midhyperplane(4), 5, o));
  EXPECT_THROW(count_complement(midhyperplane(4), 0), InputError);
}

TEST(Oracle, ThreadCountDoesNotChangeResults) {
  OracleOptions one, many;
  one.threads = 1;
  many.threads = 5;
  const auto f4 = root_system_spec('F', 4).arrangement();
  for (std::uint64_t q : {12, 13, 17}) EXPECT_EQ(count_complement(f4, q, one), count_complement(f4, q, many));
}
