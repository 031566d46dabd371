#include "quasichar/genfunc.hpp"

#include <algorithm>
#include <sstream>

#include "quasichar/errors.hpp"

namespace quasichar {

namespace {

/// c_1 = 1 - t, c_k = Phi_k otherwise; 1 - t^a = prod_{k | a} c_k.
IntPolynomial cyclotomic_factor(std::size_t k) { return k == 1 ? IntPolynomial{1, -1} : cyclotomic(k); }

std::map<std::size_t, std::size_t> cyclotomic_exponents(const std::vector<DenominatorFactor>& den) {
  std::map<std::size_t, std::size_t> e;
  for (const auto& f : den)
    for (std::size_t k = 1; k <= f.a; ++k)
      if (f.a % k == 0) e[k] += f.b;
  return e;
}

std::string numerator_string(const IntPolynomial& num) {
  if (num.is_zero()) return "0";
  const std::size_t v = num.valuation();
  IntPolynomial rest(std::vector<BigInt>(num.coefficients().begin() + static_cast<std::ptrdiff_t>(v),
                                         num.coefficients().end()));
  IntPolynomial prim = rest.primitive_part();
  BigInt scale;
  mpz_divexact(scale.get_mpz_t(), rest.leading().get_mpz_t(), prim.leading().get_mpz_t());
  const bool has_poly = *prim.degree() > 0;

  std::ostringstream os;
  if (scale == -1 && (v > 0 || has_poly))
    os << '-';
  else if (scale != 1 || (v == 0 && !has_poly))
    os << scale.get_str();
  if (v == 1) os << 't';
  if (v > 1) os << "t^" << v;
  if (has_poly) os << '(' << prim.to_string('t') << ')';
  return os.str();
}

std::string with_exponent(const std::string& base, std::size_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string join_denominator(const std::vector<std::string>& parts) {
  if (parts.empty()) return {};
  std::string body;
  for (const auto& p : parts) body += p;
  if (parts.size() == 1) return "/" + body;
  return "/(" + body + ")";
}

}  // namespace

IntPolynomial RationalGF::expanded_denominator() const {
  IntPolynomial d = IntPolynomial::constant(1);
  for (const auto& f : denominator) d = d * one_minus_power(f.a, f.b);
  return d;
}

std::optional<std::pair<std::size_t, std::size_t>> RationalGF::canonical_shape() const {
  if (denominator.size() != 1 || denominator[0].b == 0) return std::nullopt;
  return std::make_pair(denominator[0].a, denominator[0].b - 1);
}

RationalGF gf_from_quasipoly(const QuasiPolynomial& chi) {
  const std::size_t rho = chi.period;
  const std::size_t m = chi.degree;
  const std::size_t top = (m + 1) * rho;
  std::vector<BigInt> series(top + 1);
  for (std::size_t q = 1; q <= top; ++q) series[q] = evaluate(chi, from_u64(q));
  IntPolynomial q_num = (IntPolynomial(series) * one_minus_power(rho, m + 1)).truncated(top + 1);
  RationalGF gf{std::move(q_num), {{rho, m + 1}}};

  const std::size_t check = 2 * top + rho;
  auto expanded = series_expand(gf, check);
  for (std::size_t q = 1; q <= check; ++q)
    if (expanded[q - 1] != evaluate(chi, from_u64(q)))
      throw IntegrityError("generating function does not re-expand to chi at q = " + std::to_string(q));
  return gf;
}

std::vector<BigInt> series_expand(const RationalGF& gf, std::size_t terms) {
  std::vector<BigInt> c(terms + 1);
  const auto& num = gf.numerator.coefficients();
  for (std::size_t k = 0; k < num.size() && k <= terms; ++k) c[k] = num[k];
  for (const auto& f : gf.denominator) {
    if (f.a == 0) throw ContractError("denominator factor (1 - t^0) is not invertible");
    for (std::size_t rep = 0; rep < f.b; ++rep)
      for (std::size_t k = f.a; k <= terms; ++k) c[k] += c[k - f.a];
  }
  return {c.begin() + 1, c.end()};
}

RationalGF to_canonical(const RationalGF& gf, std::size_t rho, std::size_t m) {
  std::size_t used = 0;
  IntPolynomial num = gf.numerator;
  for (const auto& f : gf.denominator) {
    if (f.a == 0 || rho % f.a != 0)
      throw ContractError("factor (1 - t^" + std::to_string(f.a) + ") does not divide (1 - t^" +
                          std::to_string(rho) + ")");
    // (1 - t^rho) / (1 - t^a) = 1 + t^a + ... + t^{rho - a}
    std::vector<BigInt> geo(rho - f.a + 1);
    for (std::size_t k = 0; k < geo.size(); k += f.a) geo[k] = 1;
    IntPolynomial g(std::move(geo));
    for (std::size_t rep = 0; rep < f.b; ++rep) num = num * g;
    used += f.b;
  }
  if (used > m + 1) throw ContractError("denominator has more than m + 1 factors");
  num = num * one_minus_power(rho, m + 1 - used);
  return RationalGF{std::move(num), {{rho, m + 1}}};
}

RationalGF residue_slice(const RationalGF& canonical, std::size_t d) {
  auto shape = canonical.canonical_shape();
  if (!shape) throw ContractError("residue_slice needs a gf over a single factor (1 - t^rho)^(m+1)");
  const std::size_t rho = shape->first;
  if (d == 0 || d > rho) throw ContractError("residue must lie in 1..rho");
  return RationalGF{canonical.numerator.residue_terms(d % rho, rho), canonical.denominator};
}

IntPolynomial q_polynomial(std::size_t d, std::size_t k, std::size_t rho) {
  if (rho == 0 || d == 0 || d > rho) throw ContractError("q_polynomial needs 1 <= d <= rho");
  const std::size_t bound = d + k * rho;  // degree bound of q_{d,k}
  const std::size_t top = d + (k + 1) * rho;
  std::vector<BigInt> series(top + 1);
  for (std::size_t x = d; x <= top; x += rho) series[x] = pow(from_u64(x), static_cast<unsigned long>(k));
  IntPolynomial prod = (IntPolynomial(series) * one_minus_power(rho, k + 1)).truncated(top + 1);
  for (std::size_t x = bound + 1; x <= top; ++x)
    if (sgn(prod.coeff(x)) != 0) throw IntegrityError("q_polynomial exceeded its degree bound");
  return prod.truncated(bound + 1);
}

BigInt derivative_at_one(const IntPolynomial& p, std::size_t j) {
  BigInt total = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = j; i < c.size(); ++i) {
    BigInt falling = 1;
    for (std::size_t r = 0; r < j; ++r) falling *= static_cast<unsigned long>(i - r);
    total += c[i] * falling;
  }
  return total;
}

CyclotomicForm reduce(const RationalGF& gf) {
  CyclotomicForm out{gf.numerator, cyclotomic_exponents(gf.denominator)};
  if (out.numerator.is_zero()) {
    out.exponents.clear();
    return out;
  }
  for (auto& [k, e] : out.exponents) {
    const IntPolynomial f = cyclotomic_factor(k);
    while (e > 0) {
      auto q = divide_exact(out.numerator, f);
      if (!q) break;
      out.numerator = std::move(*q);
      --e;
    }
  }
  std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RationalGF simplify(const RationalGF& gf) {
  CyclotomicForm r = reduce(gf);
  std::map<std::size_t, long> e(r.exponents.begin(), r.exponents.end());
  IntPolynomial num = r.numerator;
  std::vector<DenominatorFactor> den;
  for (;;) {
    auto it = std::find_if(e.rbegin(), e.rend(), [](const auto& kv) { return kv.second > 0; });
    if (it == e.rend()) break;
    const std::size_t a = it->first;
    const long b = it->second;
    den.push_back({a, static_cast<std::size_t>(b)});
    for (std::size_t k = 1; k <= a; ++k) {
      if (a % k != 0) continue;
      long& ek = e[k];
      ek -= b;
      if (ek < 0) {
        const IntPolynomial f = cyclotomic_factor(k);
        for (long rep = 0; rep < -ek; ++rep) num = num * f;
        ek = 0;
      }
    }
  }
  std::sort(den.begin(), den.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  return RationalGF{std::move(num), std::move(den)};
}

std::string format_power_form(const RationalGF& gf) {
  std::vector<std::string> parts;
  for (const auto& f : gf.denominator) {
    if (f.b == 0) continue;
    std::string base = f.a == 1 ? "(1-t)" : "(1-t^" + std::to_string(f.a) + ")";
    parts.push_back(with_exponent(base, f.b));
  }
  return numerator_string(gf.numerator) + join_denominator(parts);
}

std::string format_factored(const RationalGF& gf) {
  CyclotomicForm r = reduce(gf);
  std::vector<std::string> parts;
  for (const auto& [k, e] : r.exponents)
    parts.push_back(with_exponent("(" + cyclotomic_factor(k).to_string_ascending('t') + ")", e));
  return numerator_string(r.numerator) + join_denominator(parts);
}

}  // namespace quasichar
