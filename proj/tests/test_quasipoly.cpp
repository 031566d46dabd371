#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "quasichar/errors.hpp"
#include "quasichar/families.hpp"
#include "quasichar/oracle.hpp"
#include "quasichar/quasipoly.hpp"
#include "support/oracles.hpp"

using namespace quasichar;

namespace {

PointSource oracle_points(const Arrangement& a) {
  return [&a](const BigInt& q) { return from_u64(oracles::count_points(a.matrix(), to_u64(q))); };
}

SweepOptions exhaustive() {
  SweepOptions o;
  o.strategy = SweepStrategy::Exhaustive;
  return o;
}

}  // namespace

TEST(Quasipoly, Divisors) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(60), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}));
}

TEST(Quasipoly, TrivialArrangement) {
  const auto chi = characteristic_quasipolynomial(Arrangement(IntMatrix::from_rows({{1}})));
  EXPECT_EQ(chi.period, 1u);
  EXPECT_EQ(chi.constituent(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(evaluate(chi, 5), 4);
}

TEST(Quasipoly, M4Constituents) {
  const auto chi = characteristic_quasipolynomial(midhyperplane(4));
  EXPECT_EQ(chi.period, 2u);
  EXPECT_EQ(chi.constituent(1), IntPolynomial::from_roots({0, 1, 3, 5}));
  EXPECT_EQ(chi.constituent(2), IntPolynomial::from_roots({0, 2, 3, 4}));
  EXPECT_EQ(&chi.constituent_for(7), &chi.constituent(1));
  EXPECT_EQ(&chi.constituent_for(10), &chi.constituent(2));
}

TEST(Quasipoly, B2ClosedForms) {
  const auto chi = characteristic_quasipolynomial(root_system_spec('B', 2).arrangement());
  EXPECT_EQ(chi.constituent(1), IntPolynomial::from_roots({1, 3}));
  EXPECT_EQ(chi.constituent(2), IntPolynomial::from_roots({2, 2}));
}

TEST(Quasipoly, StrategiesAgree) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 7;
    const Arrangement a(oracles::random_matrix(rng, m, n, -3, 3));
    EXPECT_EQ(signed_profile_counts(a), signed_profile_counts(a, exhaustive())) << to_string(a.matrix());
  }
  EXPECT_EQ(characteristic_quasipolynomial(midhyperplane(4)),
            characteristic_quasipolynomial(midhyperplane(4), exhaustive()));
  EXPECT_EQ(characteristic_quasipolynomial(root_system_spec('F', 4).arrangement()),
            characteristic_quasipolynomial(root_system_spec('F', 4).arrangement(), exhaustive()));
}

TEST(Quasipoly, SubsetsAgreeWithOracleInterpolation) {
  std::mt19937_64 rng(23);
  for (int done = 0; done < 60;) {
    const std::size_t m = 1 + rng() % 2, n = 1 + rng() % 4;
    const Arrangement a(oracles::random_matrix(rng, m, n, -3, 3));
    const auto chi = characteristic_quasipolynomial(a);
    // interpolation enumerates up to ((m+1) rho)^m points per modulus
    if (chi.period > 30) continue;
    ++done;
    for (auto d : divisors(chi.period))
      EXPECT_EQ(constituent_via_interpolation(oracle_points(a), d, chi.period, m), chi.constituent(d))
          << to_string(a.matrix()) << " d=" << d;
    EXPECT_EQ(quasipolynomial_via_interpolation(oracle_points(a), chi.period, m), chi);
  }
}

TEST(Quasipoly, P1IsTheOrdinaryCharacteristicPolynomial) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 6;
    const IntMatrix s = oracles::random_matrix(rng, m, n, -4, 4);
    EXPECT_EQ(constituent_via_subsets(Arrangement(s), 1), oracles::ordinary_characteristic_polynomial(s));
  }
  const auto m4 = midhyperplane(4);
  EXPECT_EQ(constituent_via_subsets(m4, 1), oracles::ordinary_characteristic_polynomial(m4.matrix()));
}

TEST(Quasipoly, ConstituentRequiresADivisorOfThePeriod) {
  EXPECT_THROW(constituent_via_subsets(midhyperplane(4), 3), ContractError);
}

TEST(Quasipoly, InterpolationDetectsAWrongPeriod) {
  const auto m4 = midhyperplane(4);
  // period 1 is wrong for M4; one of the residue classes cannot fit a monic quartic
  EXPECT_THROW(quasipolynomial_via_interpolation(oracle_points(m4), 1, 4), IntegrityError);
}

TEST(Quasipoly, MinimumPeriod) {
  const auto m4 = characteristic_quasipolynomial(midhyperplane(4));
  EXPECT_EQ(minimum_period(m4), m4);

  QuasiPolynomial padded;
  padded.degree = 1;
  padded.period = 6;
  for (auto d : divisors(6)) padded.constituents[d] = d % 2 == 0 ? IntPolynomial{-2, 1} : IntPolynomial{-1, 1};
  const auto reduced = minimum_period(padded);
  EXPECT_EQ(reduced.period, 2u);
  for (std::uint64_t q = 1; q <= 24; ++q) EXPECT_EQ(evaluate(reduced, q), evaluate(padded, q));
}

TEST(Quasipoly, RelationsAndDegrees) {
  const auto chi = characteristic_quasipolynomial(midhyperplane(5));
  EXPECT_TRUE(relation_polynomial(chi, 2, 5).is_zero());
  EXPECT_EQ(relation_polynomial(chi, 2, 3), (IntPolynomial{0, -120}));
  EXPECT_FALSE(relation_degree(chi, 2, 5));
  EXPECT_EQ(*relation_degree(chi, 2, 3), 1u);
  EXPECT_EQ(*difference_degree(chi.constituent(1), chi.constituent(2)), 3u);
  EXPECT_FALSE(difference_degree(chi.constituent(1), chi.constituent(1)));
}

TEST(Quasipoly, SweepBudget) {
  SweepOptions o;
  o.subset_budget = 1000;
  EXPECT_THROW(characteristic_quasipolynomial(midhyperplane(5), o), ResourceError);
}

TEST(Quasipoly, ThreadCountDoesNotChangeResults) {
  SweepOptions one, many;
  one.threads = 1;
  many.threads = 3;
  one.strategy = many.strategy = SweepStrategy::Exhaustive;
  const auto a = root_system_spec('B', 4).arrangement();
  EXPECT_EQ(characteristic_quasipolynomial(a, one), characteristic_quasipolynomial(a, many));
}

TEST(Quasipoly, DegreeBoundOnM5) {
  const auto a = midhyperplane(5);
  const auto chi = characteristic_quasipolynomial(a);
  const auto ladder = e_sets_by_size(a, 5);
  std::size_t s_star = 0;
  for (const auto& [s, es] : ladder) {
    if (!std::all_of(es.begin(), es.end(), [](const BigInt& e) { return gcd(e, 5) == 1; })) break;
    s_star = s;
  }
  ASSERT_GE(s_star, 1u);
  EXPECT_LT(*difference_degree(chi.constituent(5), chi.constituent(1)) + s_star, 5u);
}
