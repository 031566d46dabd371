#include "quasichar/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "quasichar/errors.hpp"
#include "quasichar/families.hpp"
#include "quasichar/genfunc.hpp"
#include "quasichar/oracle.hpp"
#include "quasichar/quasipoly.hpp"

namespace quasichar {

namespace {

struct TableRow {
  char type;
  std::size_t rank;
  std::vector<std::size_t> marks;
  std::size_t coxeter;
  std::uint64_t min_period;
  std::size_t positive_roots;
};

std::vector<TableRow> root_table() {
  std::vector<TableRow> rows;
  for (std::size_t m = 1; m <= 5; ++m) rows.push_back({'A', m, std::vector<std::size_t>(m, 1), m + 1, 1, m * (m + 1) / 2});
  for (std::size_t m = 2; m <= 5; ++m) {
    std::vector<std::size_t> marks(m, 2);
    marks[0] = 1;
    rows.push_back({'B', m, marks, 2 * m, 2, m * m});
  }
  for (std::size_t m = 3; m <= 5; ++m) {
    std::vector<std::size_t> marks(m, 2);
    marks[m - 1] = 1;
    rows.push_back({'C', m, marks, 2 * m, 2, m * m});
  }
  for (std::size_t m = 4; m <= 5; ++m) {
    std::vector<std::size_t> marks(m, 2);
    marks[0] = marks[m - 2] = marks[m - 1] = 1;
    rows.push_back({'D', m, marks, 2 * m - 2, 2, m * (m - 1)});
  }
  rows.push_back({'E', 6, {1, 2, 2, 3, 2, 1}, 12, 6, 36});
  rows.push_back({'E', 7, {2, 2, 3, 4, 3, 2, 1}, 18, 12, 63});
  rows.push_back({'E', 8, {2, 3, 4, 6, 5, 4, 3, 2}, 30, 60, 120});
  rows.push_back({'F', 4, {2, 3, 4, 2}, 12, 12, 24});
  rows.push_back({'G', 2, {2, 3}, 6, 6, 6});
  return rows;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

SweepOptions sweep_options(const VerifyOptions& o) {
  SweepOptions s;
  s.threads = o.threads;
  return s;
}

OracleOptions oracle_options(const VerifyOptions& o) {
  OracleOptions s;
  s.threads = o.threads;
  return s;
}

bool prime_power_or_one(const BigInt& e) {
  if (e == 1) return true;
  BigInt p = 2;
  BigInt x = e;
  while (p * p <= x && x % p != 0) ++p;
  if (x % p != 0) return true;  // x is prime
  while (x % p == 0) x /= p;
  return x == 1;
}

std::vector<CheckResult> root_systems(const VerifyOptions&) {
  std::vector<CheckResult> out;
  for (const auto& row : root_table()) {
    const RootSystemSpec spec = root_system_spec(row.type, row.rank);
    std::vector<std::string> bad;
    if (spec.marks != row.marks) bad.push_back("marks " + join(spec.marks));
    if (spec.coxeter != row.coxeter) bad.push_back("h " + std::to_string(spec.coxeter));
    if (spec.matrix.cols() != row.positive_roots) bad.push_back("columns " + std::to_string(spec.matrix.cols()));
    const auto chi = minimum_period(root_system_quasipolynomial(spec));
    if (chi.period != row.min_period) bad.push_back("minimum period " + std::to_string(chi.period));
    const auto series = series_expand(root_system_gf(spec), 3 * row.coxeter);
    for (std::size_t q = 1; q <= series.size(); ++q) {
      const int s = sgn(series[q - 1]);
      if ((q < row.coxeter && s != 0) || (q >= row.coxeter && s <= 0)) {
        bad.push_back("sign of chi(" + std::to_string(q) + ")");
        break;
      }
    }
    std::ostringstream detail;
    detail << "marks " << join(row.marks) << ", h " << row.coxeter << ", minimum period " << row.min_period;
    for (const auto& b : bad) detail << "; got " << b;
    out.push_back(check(spec.label(), bad.empty(), detail.str()));
  }
  return out;
}

std::vector<CheckResult> m5_relations(const VerifyOptions& o) {
  const auto chi = characteristic_quasipolynomial(midhyperplane(5), sweep_options(o));
  std::vector<CheckResult> out;
  out.push_back(check("period", chi.period == 60, "lcm period " + std::to_string(chi.period)));
  const IntPolynomial zero;
  const IntPolynomial minus120t{0, -120};
  const std::vector<std::tuple<std::uint64_t, std::uint64_t, const IntPolynomial*>> table = {
      {2, 5, &zero},         {3, 5, &zero},         {4, 5, &zero},         {5, 6, &zero},
      {5, 12, &zero},        {2, 3, &minus120t},    {2, 15, &minus120t},   {3, 4, &minus120t},
      {3, 10, &minus120t},   {3, 20, &minus120t},   {4, 15, &minus120t}};
  for (const auto& [d, d2, expected] : table) {
    const IntPolynomial got = relation_polynomial(chi, d, d2);
    out.push_back(check("(" + std::to_string(d) + "," + std::to_string(d2) + ")", got == *expected,
                        "P_d + P_d' - P_dd' - P_1 = " + (got.is_zero() ? std::string("0") : got.to_string('t'))));
  }
  return out;
}

std::vector<CheckResult> oracle_grid(const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> dim(1, 3), len(1, 5), entry(-3, 3);
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < o.grid_matrices; ++i) {
    const std::size_t m = static_cast<std::size_t>(dim(rng));
    const std::size_t n = static_cast<std::size_t>(len(rng));
    IntMatrix s(m, n);
    for (std::size_t c = 0; c < n; ++c) {
      do {
        for (std::size_t r = 0; r < m; ++r) s(r, c) = entry(rng);
      } while (s.column_is_zero(c));
    }
    const Arrangement a(s);
    const auto chi = characteristic_quasipolynomial(a, sweep_options(o));
    std::string detail;
    for (std::uint64_t q = 1; q <= o.grid_max_q && detail.empty(); ++q) {
      const BigInt want = from_u64(count_complement(a, q, oracle_options(o)));
      const BigInt got = evaluate(chi, from_u64(q));
      if (want != got)
        detail = "q=" + std::to_string(q) + ": oracle " + want.get_str() + ", subsets " + got.get_str() + "\n" +
                 to_string(s);
    }
    out.push_back(check("grid " + std::to_string(i) + " (" + std::to_string(m) + "x" + std::to_string(n) + ")",
                        detail.empty(), detail));
  }
  return out;
}

std::vector<CheckResult> cross_path(const VerifyOptions& o) {
  const std::vector<std::pair<char, std::size_t>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                                                           {'B', 3}, {'B', 4}, {'C', 3}, {'D', 4}, {'G', 2},
                                                           {'F', 4}};
  std::vector<CheckResult> out;
  for (const auto& [type, rank] : types) {
    const RootSystemSpec spec = root_system_spec(type, rank);
    const Arrangement a = spec.arrangement();
    const auto by_subsets = characteristic_quasipolynomial(a, sweep_options(o));
    const auto by_gf = root_system_quasipolynomial(spec);
    std::string detail;
    for (std::uint64_t q = 1; q <= 20 && detail.empty(); ++q) {
      const BigInt s = evaluate(by_subsets, from_u64(q));
      const BigInt g = evaluate(by_gf, from_u64(q));
      const BigInt w = from_u64(count_complement(a, q, oracle_options(o)));
      if (s != g || g != w)
        detail = "q=" + std::to_string(q) + ": subsets " + s.get_str() + ", gf " + g.get_str() + ", oracle " +
                 w.get_str();
    }
    out.push_back(check(spec.label(), detail.empty(), detail.empty() ? "agree for q <= 20" : detail));
  }
  return out;
}

IntPolynomial product_of_linear(std::size_t first, std::size_t step, std::size_t count) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < count; ++i) p = p * IntPolynomial{-static_cast<long>(first + i * step), 1};
  return p;
}

std::vector<CheckResult> bcd(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  std::map<std::pair<char, std::size_t>, QuasiPolynomial> chi;
  auto get = [&](char type, std::size_t m) -> const QuasiPolynomial& {
    auto key = std::make_pair(type, m);
    if (!chi.count(key))
      chi[key] = characteristic_quasipolynomial(root_system_spec(type, m).arrangement(), sweep_options(o));
    return chi[key];
  };

  for (std::size_t m : {3, 4})
    out.push_back(check("chi_B = chi_C, m=" + std::to_string(m), get('B', m) == get('C', m)));

  for (std::size_t m : {4, 5}) {
    const auto& p2 = get('B', m).constituent(2);
    const auto& q1 = get('D', m).constituent(1);
    out.push_back(check("P_2(q) = Q_1(q-1), m=" + std::to_string(m), p2 == q1.shift_argument(-1)));
  }

  for (std::size_t m : {4, 5}) {
    std::string detail;
    for (std::uint64_t q = 1; q <= 30 && detail.empty(); ++q)
      if (evaluate(get('B', m), from_u64(2 * q)) != evaluate(get('D', m), from_u64(2 * q - 1)))
        detail = "differs at q=" + std::to_string(q);
    out.push_back(check("chi_B(2q) = chi_D(2q-1), m=" + std::to_string(m) + ", q<=30", detail.empty(), detail));
  }

  for (std::size_t m = 3; m <= 5; ++m) {
    const IntPolynomial odd = product_of_linear(1, 2, m);
    const IntPolynomial even = product_of_linear(2, 2, m - 1) * IntPolynomial{-static_cast<long>(m), 1};
    const auto& b = get('B', m);
    out.push_back(check("B" + std::to_string(m) + " closed form",
                        b.period == 2 && b.constituent(1) == odd && b.constituent(2) == even));
  }
  for (std::size_t m = 4; m <= 5; ++m) {
    const IntPolynomial odd = product_of_linear(1, 2, m - 1) * IntPolynomial{-static_cast<long>(m - 1), 1};
    const long mm = static_cast<long>(m);
    const IntPolynomial quad{mm * (mm - 1) / 2, -2 * (mm - 1), 1};
    const IntPolynomial even = product_of_linear(2, 2, m - 2) * quad;
    const auto& d = get('D', m);
    out.push_back(check("D" + std::to_string(m) + " closed form",
                        d.period == 2 && d.constituent(1) == odd && d.constituent(2) == even));
  }
  return out;
}

std::vector<CheckResult> prime_power(const VerifyOptions& o) {
  std::vector<Arrangement> cases = {midhyperplane(4)};
  for (std::size_t m = 3; m <= 5; ++m) {
    cases.push_back(root_system_spec('B', m).arrangement());
    cases.push_back(root_system_spec('C', m).arrangement());
  }
  for (std::size_t m = 4; m <= 5; ++m) cases.push_back(root_system_spec('D', m).arrangement());

  std::vector<CheckResult> out;
  EnumerationOptions eo;
  eo.threads = o.threads;
  for (const auto& a : cases) {
    const std::size_t s = std::min(a.dimension(), a.size());
    const auto ladder = e_sets_by_size(a, s, eo);
    const auto& es = ladder.at(s);
    const bool hypothesis = std::all_of(es.begin(), es.end(), prime_power_or_one);
    const auto chi = characteristic_quasipolynomial(a, sweep_options(o));
    std::size_t pairs = 0;
    std::string bad;
    const auto divs = divisors(chi.period);
    for (auto d : divs)
      for (auto d2 : divs)
        if (d <= d2 && std::gcd(d, d2) == 1) {
          ++pairs;
          if (!relation_polynomial(chi, d, d2).is_zero() && bad.empty())
            bad = "fails for (" + std::to_string(d) + "," + std::to_string(d2) + ")";
        }
    std::ostringstream detail;
    detail << "e-set {" << join(std::vector<BigInt>(es.begin(), es.end())) << "}, " << pairs << " coprime pairs";
    if (!hypothesis) detail << "; hypothesis does not hold";
    if (!bad.empty()) detail << "; " << bad;
    out.push_back(check(a.label(), hypothesis && bad.empty(), detail.str()));
  }
  return out;
}

std::vector<CheckResult> fourier(const VerifyOptions&) {
  std::vector<CheckResult> out;
  for (std::size_t rho : {2, 6})
    for (std::size_t k = 0; k <= 4; ++k)
      for (std::size_t j = 0; j <= k; ++j) {
        std::vector<BigInt> values;
        for (std::size_t d = 1; d <= rho; ++d) values.push_back(derivative_at_one(q_polynomial(d, k, rho), j));
        const bool ok = sgn(values[0]) != 0 &&
                        std::all_of(values.begin(), values.end(), [&](const BigInt& v) { return v == values[0]; });
        out.push_back(check("rho=" + std::to_string(rho) + " k=" + std::to_string(k) + " j=" + std::to_string(j), ok,
                            "values " + join(values)));
      }
  return out;
}

/// Largest s <= s_max such that pred(e) holds for every e in the ladder at s;
/// 0 when it already fails at s = 1.
std::size_t largest_s(const std::map<std::size_t, std::set<BigInt>>& ladder,
                      const std::function<bool(const BigInt&)>& pred) {
  std::size_t best = 0;
  for (const auto& [s, es] : ladder) {
    if (!std::all_of(es.begin(), es.end(), pred)) break;
    best = s;
  }
  return best;
}

std::vector<CheckResult> degree_bounds(const VerifyOptions& o) {
  struct Case {
    Arrangement a;
    QuasiPolynomial chi;
  };
  std::vector<Case> cases;
  for (std::size_t m : {4, 5}) {
    auto a = midhyperplane(m);
    auto chi = characteristic_quasipolynomial(a, sweep_options(o));
    cases.push_back({std::move(a), std::move(chi)});
  }
  for (auto [type, rank] : std::vector<std::pair<char, std::size_t>>{{'B', 4}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}}) {
    const auto spec = root_system_spec(type, rank);
    cases.push_back({spec.arrangement(), root_system_quasipolynomial(spec)});
  }

  std::vector<CheckResult> out;
  EnumerationOptions eo;
  eo.threads = o.threads;
  for (const auto& [a, chi] : cases) {
    const std::size_t m = a.dimension();
    const auto ladder = e_sets_by_size(a, std::min(m, a.size()), eo);
    const auto divs = divisors(chi.period);
    std::size_t tested = 0;
    std::string bad;
    for (auto d : divs)
      for (auto d2 : divs) {
        if (d >= d2) continue;
        const BigInt bd = from_u64(d), bd2 = from_u64(d2);
        const std::size_t s = largest_s(ladder, [&](const BigInt& e) { return gcd(e, bd) == gcd(e, bd2); });
        if (s > 0) {
          ++tested;
          const auto deg = difference_degree(chi.constituent(d), chi.constituent(d2));
          if (deg && *deg + s >= m && bad.empty())
            bad = "deg(P_" + std::to_string(d) + " - P_" + std::to_string(d2) + ") = " + std::to_string(*deg);
        }
        if (std::gcd(d, d2) != 1 || d == 1) continue;
        const std::size_t s2 =
            largest_s(ladder, [&](const BigInt& e) { return gcd(e, bd) == 1 || gcd(e, bd2) == 1; });
        if (s2 > 0) {
          ++tested;
          const auto deg = relation_degree(chi, d, d2);
          if (deg && *deg + s2 >= m && bad.empty())
            bad = "relation degree for (" + std::to_string(d) + "," + std::to_string(d2) + ") = " + std::to_string(*deg);
        }
      }
    out.push_back(check(a.label(), bad.empty(), std::to_string(tested) + " bounds checked" + (bad.empty() ? "" : "; " + bad)));
  }
  return out;
}

const std::map<std::string, std::function<std::vector<CheckResult>(const VerifyOptions&)>>& registry() {
  static const std::map<std::string, std::function<std::vector<CheckResult>(const VerifyOptions&)>> r = {
      {"root-systems", root_systems}, {"m5-relations", m5_relations}, {"oracle-grid", oracle_grid},
      {"cross-path", cross_path},     {"bcd", bcd},                   {"prime-power", prime_power},
      {"fourier", fourier},           {"degree-bounds", degree_bounds}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"root-systems", "m5-relations", "oracle-grid", "cross-path",
                                                 "bcd",          "prime-power",  "fourier",     "degree-bounds"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  const auto& r = registry();
  auto it = r.find(suite);
  if (it == r.end()) throw InputError("unknown verification suite '" + suite + "'");
  return it->second(opts);
}

}  // namespace quasichar
