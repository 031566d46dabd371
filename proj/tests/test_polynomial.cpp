#include <gtest/gtest.h>

#include "quasichar/polynomial.hpp"

using namespace quasichar;

TEST(Polynomial, TrimAndDegree) {
  IntPolynomial z{0, 0, 0};
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree());
  IntPolynomial p{1, 2, 0};
  EXPECT_EQ(*p.degree(), 1u);
  EXPECT_EQ(p.leading(), 2);
  EXPECT_FALSE(p.is_monic());
}

TEST(Polynomial, FromRootsAndDescending) {
  const auto p = IntPolynomial::from_roots({0, 1, 3, 5});
  EXPECT_EQ(p, IntPolynomial::from_descending({1, -9, 23, -15, 0}));
  EXPECT_EQ(p.to_string(), "q^4 - 9q^3 + 23q^2 - 15q");
  EXPECT_EQ(p(7), 336);
  EXPECT_EQ(p.valuation(), 1u);
}

TEST(Polynomial, Arithmetic) {
  const IntPolynomial a{1, 1};   // 1 + t
  const IntPolynomial b{1, -1};  // 1 - t
  EXPECT_EQ(a * b, (IntPolynomial{1, 0, -1}));
  EXPECT_EQ(a + b, IntPolynomial{2});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(BigInt(3) * a, (IntPolynomial{3, 3}));
  EXPECT_EQ((IntPolynomial{0, 0, 3}).derivative(), (IntPolynomial{0, 6}));
}

TEST(Polynomial, ShiftAndNegate) {
  const IntPolynomial p = IntPolynomial::from_roots({2, 4});
  EXPECT_EQ(p.shift_argument(1), IntPolynomial::from_roots({1, 3}));
  EXPECT_EQ(p.negate_argument(), IntPolynomial::from_roots({-2, -4}));
}

TEST(Polynomial, ResidueTermsPartition) {
  const IntPolynomial p{1, 2, 3, 4, 5, 6, 7};
  IntPolynomial sum;
  for (std::size_t r = 0; r < 3; ++r) sum += p.residue_terms(r, 3);
  EXPECT_EQ(sum, p);
  EXPECT_EQ(p.residue_terms(1, 3), (IntPolynomial{0, 2, 0, 0, 5}));
}

TEST(Polynomial, ExactDivisionAndGcd) {
  const IntPolynomial a = IntPolynomial::from_roots({1, 2, 3});
  const IntPolynomial b = IntPolynomial::from_roots({2});
  auto q = divide_exact(a, b);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, IntPolynomial::from_roots({1, 3}));
  EXPECT_FALSE(divide_exact(a, IntPolynomial::from_roots({4})));
  EXPECT_FALSE(divide_exact(IntPolynomial{1, 1}, IntPolynomial{0, 2}));
  EXPECT_EQ(gcd(a * BigInt(6), IntPolynomial::from_roots({3, 7}) * BigInt(4)), IntPolynomial::from_roots({3}));
}

TEST(Polynomial, CyclotomicAndPowers) {
  EXPECT_EQ(cyclotomic(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic(3), (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPolynomial{1, -1, 1}));
  // t^12 - 1 = prod over k | 12 of Phi_k
  IntPolynomial prod = IntPolynomial::constant(1);
  for (std::size_t k : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(k);
  EXPECT_EQ(prod, IntPolynomial::monomial(1, 12) - IntPolynomial::constant(1));
  EXPECT_EQ(one_minus_power(2, 2), (IntPolynomial{1, 0, -2, 0, 1}));
}

TEST(Polynomial, ContentAndPrimitivePart) {
  const IntPolynomial p{-6, 12, 18};
  EXPECT_EQ(p.content(), 6);
  EXPECT_EQ(p.primitive_part(), (IntPolynomial{-1, 2, 3}));
  EXPECT_EQ((IntPolynomial{3, 5, 7}).to_string_ascending('t'), "3+5t+7t^2");
}
