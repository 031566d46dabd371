#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "quasichar/integer.hpp"

namespace quasichar {

/// Dense univariate polynomial over Z, ascending powers, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t k);
  /// prod_i (t - roots[i])
  static IntPolynomial from_roots(std::initializer_list<long> roots);
  static IntPolynomial from_descending(const std::vector<BigInt>& descending);

  bool is_zero() const noexcept { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const noexcept;
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  /// Coefficients from the top power down to t^0.
  std::vector<BigInt> descending() const;
  BigInt coeff(std::size_t k) const;
  BigInt leading() const;
  bool is_monic() const;

  BigInt operator()(const BigInt& x) const;

  IntPolynomial derivative() const;
  /// Terms of degree < n.
  IntPolynomial truncated(std::size_t n) const;
  /// Terms whose exponent is congruent to r modulo mod.
  IntPolynomial residue_terms(std::size_t r, std::size_t mod) const;
  /// P(t + c).
  IntPolynomial shift_argument(const BigInt& c) const;
  /// P(-t).
  IntPolynomial negate_argument() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Descending powers, e.g. "q^4 - 9q^3 + 23q^2 - 15q".
  std::string to_string(char var = 'q') const;
  /// Ascending powers, e.g. "1+t+t^2"; used for cyclotomic factors.
  std::string to_string_ascending(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Quotient a / b when b divides a exactly over Z; b must be nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (gcd over Q, normalized).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// (1 - t^a)^b.
IntPolynomial one_minus_power(std::size_t a, std::size_t b);

/// The k-th cyclotomic polynomial Phi_k.
IntPolynomial cyclotomic(std::size_t k);

}  // namespace quasichar
