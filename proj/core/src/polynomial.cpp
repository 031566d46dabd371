#include "quasichar/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "quasichar/errors.hpp"

namespace quasichar {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_roots(std::initializer_list<long> roots) {
  IntPolynomial p = constant(1);
  for (long r : roots) p = p * IntPolynomial{-r, 1};
  return p;
}

IntPolynomial IntPolynomial::from_descending(const std::vector<BigInt>& descending) {
  return IntPolynomial(std::vector<BigInt>(descending.rbegin(), descending.rend()));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

std::size_t IntPolynomial::valuation() const noexcept {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return k;
  return 0;
}

std::vector<BigInt> IntPolynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

BigInt IntPolynomial::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

BigInt IntPolynomial::leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

bool IntPolynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::truncated(std::size_t n) const {
  return IntPolynomial(std::vector<BigInt>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(n, c_.size()))));
}

IntPolynomial IntPolynomial::residue_terms(std::size_t r, std::size_t mod) const {
  std::vector<BigInt> out(c_.size());
  for (std::size_t k = r % mod; k < c_.size(); k += mod) out[k] = c_[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shift_argument(const BigInt& c) const {
  // Horner in the ring Z[t]: P(t + c) = (...(a_n (t+c) + a_{n-1})(t+c) + ...).
  IntPolynomial lin(std::vector<BigInt>{c, BigInt(1)});
  IntPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

IntPolynomial IntPolynomial::negate_argument() const {
  std::vector<BigInt> out(c_);
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& x : c_) g = quasichar::gcd(g, x);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  BigInt g = content();
  if (sgn(c_.back()) < 0) g = -g;
  std::vector<BigInt> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) mpz_divexact(out[k].get_mpz_t(), c_[k].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

namespace {

void append_term(std::ostringstream& os, const BigInt& c, std::size_t k, char var, bool first) {
  BigInt mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << '-';
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  if (k == 0 || mag != 1) os << mag.get_str();
  if (k >= 1) os << var;
  if (k >= 2) os << '^' << k;
}

}  // namespace

std::string IntPolynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) == 0) continue;
    append_term(os, c_[k], k, var, first);
    first = false;
  }
  return os.str();
}

std::string IntPolynomial::to_string_ascending(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    BigInt mag = abs(c_[k]);
    if (!first || sgn(c_[k]) < 0) os << (sgn(c_[k]) < 0 ? "-" : "+");
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ContractError("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  const std::size_t db = *b.degree();
  if (*a.degree() < db) return std::nullopt;
  std::vector<BigInt> r(a.coefficients());
  std::vector<BigInt> q(r.size() - db);
  const BigInt& lb = b.coefficients().back();
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt f;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.coefficients()[j];
  }
  for (std::size_t k = 0; k < db; ++k)
    if (sgn(r[k]) != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

namespace {

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const std::size_t db = *b.degree();
  const BigInt lb = b.leading();
  while (!a.is_zero() && *a.degree() >= db) {
    const std::size_t da = *a.degree();
    IntPolynomial t = IntPolynomial::monomial(a.leading(), da - db) * b;
    a *= lb;
    a -= t;
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (*x.degree() < *y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPolynomial one_minus_power(std::size_t a, std::size_t b) {
  // Binomial expansion: sum_i (-1)^i C(b, i) t^{a i}.
  std::vector<BigInt> out(a * b + 1);
  for (std::size_t i = 0; i <= b; ++i) {
    BigInt c = binomial(b, i);
    out[a * i] += (i % 2 ? -c : c);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial cyclotomic(std::size_t k) {
  if (k == 0) throw ContractError("cyclotomic index must be positive");
  // t^k - 1 divided by Phi_d for every proper divisor d.
  IntPolynomial p = IntPolynomial::monomial(1, k) - IntPolynomial::constant(1);
  for (std::size_t d = 1; d < k; ++d)
    if (k % d == 0) p = *divide_exact(p, cyclotomic(d));
  return p;
}

}  // namespace quasichar
