#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "quasichar/arrangement.hpp"
#include "quasichar/polynomial.hpp"

namespace quasichar {

/// A quasi-polynomial whose constituent on q depends only on gcd(period, q).
struct QuasiPolynomial {
  std::size_t degree = 0;
  std::uint64_t period = 1;
  /// One constituent per divisor of `period`.
  std::map<std::uint64_t, IntPolynomial> constituents;

  const IntPolynomial& constituent(std::uint64_t d) const;
  const IntPolynomial& constituent_for(const BigInt& q) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// chi(q) = constituents[gcd(period, q)](q); q >= 1.
BigInt evaluate(const QuasiPolynomial& chi, const BigInt& q);

enum class SweepStrategy {
  /// Signed dynamic program over the distinct lattices spanned by column
  /// prefixes; a column already in the lattice cancels its own branch.
  LatticeClasses,
  /// Visit all 2^n subsets and profile each one.
  Exhaustive,
};

struct SweepOptions : EnumerationOptions {
  SweepStrategy strategy = SweepStrategy::LatticeClasses;
};

/// sum over all J (the empty set included) of (-1)^{|J|}, grouped by the
/// Smith profile of S_J. Zero groups are dropped. Refuses when 2^n exceeds
/// the subset budget.
std::map<SmithProfile, BigInt> signed_profile_counts(const Arrangement& a,
                                                     const SweepOptions& opts = {});

/// P_d(t) = sum_J (-1)^{|J|} e(J, d) t^{m - rank(J)} from aggregated counts.
IntPolynomial constituent_from_counts(const std::map<SmithProfile, BigInt>& counts, std::size_t m,
                                      const BigInt& d);

/// P_d via the subset sum; d must divide lcm_period(a).
IntPolynomial constituent_via_subsets(const Arrangement& a, const BigInt& d,
                                      const SweepOptions& opts = {});

/// Period lcm_period(a) and one subset-sum constituent per divisor, from a
/// single sweep.
QuasiPolynomial characteristic_quasipolynomial(const Arrangement& a, const SweepOptions& opts = {});

/// Exact chi(q) for q >= 1.
using PointSource = std::function<BigInt(const BigInt& q)>;

/// Interpolates chi at q = d, d + rho, ..., d + m rho with exact rationals.
/// Throws IntegrityError unless the result is monic of degree m over Z.
IntPolynomial constituent_via_interpolation(const PointSource& points, std::uint64_t d,
                                            std::uint64_t rho, std::size_t m);

/// Interpolates every residue class 1..rho and checks that classes with the
/// same gcd(rho, q) agree before keying them by divisor.
QuasiPolynomial quasipolynomial_via_interpolation(const PointSource& points, std::uint64_t rho,
                                                  std::size_t m);

/// Smallest divisor rho' of the period that is still a period, with the
/// constituents re-keyed by the divisors of rho'.
QuasiPolynomial minimum_period(const QuasiPolynomial& chi);

/// deg(a - b); nullopt when a == b.
std::optional<std::size_t> difference_degree(const IntPolynomial& a, const IntPolynomial& b);

/// P_d + P_d' - P_{dd'} - P_1.
IntPolynomial relation_polynomial(const QuasiPolynomial& chi, std::uint64_t d, std::uint64_t d2);

/// deg(P_1 + P_{dd'} - P_d - P_d'); nullopt for the zero polynomial.
std::optional<std::size_t> relation_degree(const QuasiPolynomial& chi, std::uint64_t d,
                                           std::uint64_t d2);

std::string to_string(const QuasiPolynomial& chi);

}  // namespace quasichar
