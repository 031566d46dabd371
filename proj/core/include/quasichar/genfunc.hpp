#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasichar/polynomial.hpp"
#include "quasichar/quasipoly.hpp"

namespace quasichar {

/// (1 - t^a)^b
struct DenominatorFactor {
  std::size_t a = 1;
  std::size_t b = 1;
  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// numerator / prod (1 - t^a)^b as a formal power series in t.
struct RationalGF {
  IntPolynomial numerator;
  std::vector<DenominatorFactor> denominator;

  IntPolynomial expanded_denominator() const;
  /// (rho, m) when the denominator is the single factor (1 - t^rho)^(m+1).
  std::optional<std::pair<std::size_t, std::size_t>> canonical_shape() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Fully reduced form: numerator over prod_k c_k^{e_k}, where c_1 = 1 - t and
/// c_k is the k-th cyclotomic polynomial for k > 1.
struct CyclotomicForm {
  IntPolynomial numerator;
  std::map<std::size_t, std::size_t> exponents;
};

/// Q(t) / (1 - t^rho)^(m+1) with Q(t) = sum_{q>=1} chi(q) t^q times the
/// denominator. deg Q <= (m+1) rho; the expansion is re-checked.
RationalGF gf_from_quasipoly(const QuasiPolynomial& chi);

/// Coefficients of t^1 .. t^N.
std::vector<BigInt> series_expand(const RationalGF& gf, std::size_t terms);

/// Rewrites gf over (1 - t^rho)^(m+1). Every factor (1 - t^a)^b must have
/// a | rho and the exponents must total at most m + 1.
RationalGF to_canonical(const RationalGF& gf, std::size_t rho, std::size_t m);

/// The part of a canonical gf whose exponents are congruent to d mod rho,
/// over the same denominator. 1 <= d <= rho.
RationalGF residue_slice(const RationalGF& canonical, std::size_t d);

/// q_{d,k}: sum_{s>=0} (d + rho s)^k t^{d + rho s} = q_{d,k}(t) / (1 - t^rho)^(k+1).
IntPolynomial q_polynomial(std::size_t d, std::size_t k, std::size_t rho);

/// j-th derivative at t = 1.
BigInt derivative_at_one(const IntPolynomial& p, std::size_t j);

/// Cancels every common cyclotomic factor.
CyclotomicForm reduce(const RationalGF& gf);

/// Reduced and rewritten over factors (1 - t^a)^b with a ascending. When the
/// reduced denominator is not such a product, the smallest covering product
/// is used and the surplus factors are folded into the numerator.
RationalGF simplify(const RationalGF& gf);

/// "48t^6(t^3 + 5t^2 + 7t + 3)/(1-t^2)^5"
std::string format_power_form(const RationalGF& gf);

/// Reduced, with the denominator split into cyclotomic factors:
/// "48t^6(t + 3)/((1-t)^5(1+t)^3)"
std::string format_factored(const RationalGF& gf);

}  // namespace quasichar
