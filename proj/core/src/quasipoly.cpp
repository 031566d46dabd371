#include "quasichar/quasipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "quasichar/detail/subset_walk.hpp"
#include "quasichar/errors.hpp"

namespace quasichar {

__extension__ typedef __int128 Weight;
__extension__ typedef unsigned __int128 UWeight;

namespace {

BigInt to_big(Weight w) {
  const bool negative = w < 0;
  UWeight u = negative ? -static_cast<UWeight>(w) : static_cast<UWeight>(w);
  BigInt hi = from_u64(static_cast<std::uint64_t>(u >> 64));
  BigInt out = (hi << 64) + from_u64(static_cast<std::uint64_t>(u));
  return negative ? BigInt(-out) : out;
}

template <class Int>
SmithProfile profile_of(const detail::HermiteLattice<Int>& lat) {
  SmithProfile p;
  p.rank = lat.rank();
  if (lat.unit_pivots()) {
    p.divisors.assign(p.rank, BigInt(1));
    return p;
  }
  for (const auto& e : lat.elementary_divisors()) p.divisors.push_back(BigInt(detail::to_big(e)));
  return p;
}

template <class Int>
std::map<SmithProfile, BigInt> lattice_class_counts(const Arrangement& a) {
  using Lattice = detail::HermiteLattice<Int>;
  const auto cols = detail::columns_as<Int>(a.matrix());
  std::unordered_map<Lattice, Weight, detail::LatticeHash<Int>> states;
  states.emplace(Lattice(a.dimension()), Weight{1});

  for (const auto& col : cols) {
    std::unordered_map<Lattice, Weight, detail::LatticeHash<Int>> next;
    next.reserve(states.size() * 2);
    for (const auto& [lat, w] : states) {
      Lattice grown = lat;
      grown.insert(col);
      if (grown == lat) continue;  // include and exclude cancel
      next[lat] += w;
      next[std::move(grown)] -= w;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    states = std::move(next);
  }

  std::map<SmithProfile, Weight> grouped;
  for (const auto& [lat, w] : states) grouped[profile_of(lat)] += w;
  std::map<SmithProfile, BigInt> out;
  for (const auto& [p, w] : grouped)
    if (w != 0) out.emplace(p, to_big(w));
  return out;
}

template <class Int>
std::map<SmithProfile, BigInt> exhaustive_counts(const Arrangement& a, std::size_t workers) {
  using Lattice = detail::HermiteLattice<Int>;
  const auto cols = detail::columns_as<Int>(a.matrix());
  const std::size_t m = a.dimension();
  constexpr std::size_t kMemoLimit = std::size_t{1} << 21;

  std::vector<std::map<SmithProfile, Weight>> partial(workers);
  detail::run_workers(workers, [&](std::size_t w, std::size_t nw) {
    // Profiles with all divisors one are bucketed by rank without hashing.
    std::vector<Weight> unit_by_rank(m + 1, 0);
    std::vector<SmithProfile> profiles;
    std::map<SmithProfile, std::size_t> index;
    std::vector<Weight> weight;
    std::unordered_map<Lattice, std::size_t, detail::LatticeHash<Int>> memo;

    detail::walk_subsets<Int>(cols, m, cols.size(), w, nw, [&](const Lattice& lat, std::size_t size) {
      const Weight sign = size % 2 ? -1 : 1;
      if (lat.unit_pivots()) {
        unit_by_rank[lat.rank()] += sign;
        return;
      }
      auto it = memo.find(lat);
      std::size_t id;
      if (it != memo.end()) {
        id = it->second;
      } else {
        SmithProfile p = profile_of(lat);
        auto [pos, fresh] = index.emplace(p, profiles.size());
        if (fresh) {
          profiles.push_back(std::move(p));
          weight.push_back(0);
        }
        id = pos->second;
        if (memo.size() >= kMemoLimit) memo.clear();
        memo.emplace(lat, id);
      }
      weight[id] += sign;
    });

    auto& out = partial[w];
    for (std::size_t r = 0; r <= m; ++r)
      if (unit_by_rank[r] != 0) out[SmithProfile{r, std::vector<BigInt>(r, BigInt(1))}] += unit_by_rank[r];
    for (std::size_t i = 0; i < profiles.size(); ++i) out[profiles[i]] += weight[i];
  });

  std::map<SmithProfile, Weight> merged;
  merged[SmithProfile{}] += 1;  // the empty subset
  for (const auto& p : partial)
    for (const auto& [k, v] : p) merged[k] += v;
  std::map<SmithProfile, BigInt> out;
  for (const auto& [k, v] : merged)
    if (v != 0) out.emplace(k, to_big(v));
  return out;
}

std::uint64_t subset_total(std::size_t n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n);
}

}  // namespace

const IntPolynomial& QuasiPolynomial::constituent(std::uint64_t d) const {
  auto it = constituents.find(d);
  if (it == constituents.end())
    throw ContractError("no constituent for divisor " + std::to_string(d) + " of period " +
                        std::to_string(period));
  return it->second;
}

const IntPolynomial& QuasiPolynomial::constituent_for(const BigInt& q) const {
  if (sgn(q) <= 0) throw ContractError("quasi-polynomials are evaluated at q >= 1");
  return constituent(to_u64(gcd(from_u64(period), q)));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt evaluate(const QuasiPolynomial& chi, const BigInt& q) { return chi.constituent_for(q)(q); }

namespace {

void check_subset_budget(const Arrangement& a, const SweepOptions& opts) {
  const std::uint64_t planned = subset_total(a.size());
  if (planned > opts.subset_budget) {
    std::ostringstream os;
    os << "subset sum over 2^" << a.size() << " subsets exceeds the subset budget of "
       << opts.subset_budget << "; raise --budget-subsets or use the interpolation path";
    throw ResourceError(os.str(), a.size() >= 64 ? std::ldexp(1.0L, static_cast<int>(a.size())) : planned,
                        static_cast<long double>(opts.subset_budget));
  }
}

}  // namespace

std::map<SmithProfile, BigInt> signed_profile_counts(const Arrangement& a, const SweepOptions& opts) {
  check_subset_budget(a, opts);
  if (opts.strategy == SweepStrategy::LatticeClasses) {
    try {
      return lattice_class_counts<std::int64_t>(a);
    } catch (const detail::Overflow&) {
      return lattice_class_counts<BigInt>(a);
    }
  }
  std::size_t workers = opts.threads ? opts.threads : default_thread_count();
  workers = std::max<std::size_t>(1, std::min(workers, a.size()));
  try {
    return exhaustive_counts<std::int64_t>(a, workers);
  } catch (const detail::Overflow&) {
    return exhaustive_counts<BigInt>(a, workers);
  }
}

IntPolynomial constituent_from_counts(const std::map<SmithProfile, BigInt>& counts, std::size_t m,
                                      const BigInt& d) {
  std::vector<BigInt> c(m + 1);
  for (const auto& [p, w] : counts) c[m - p.rank] += w * p.gcd_product(d);
  return IntPolynomial(std::move(c));
}

IntPolynomial constituent_via_subsets(const Arrangement& a, const BigInt& d, const SweepOptions& opts) {
  if (sgn(d) <= 0) throw ContractError("constituent index must be positive");
  check_subset_budget(a, opts);
  const BigInt rho = lcm_period(a, opts);
  if (!mpz_divisible_p(rho.get_mpz_t(), d.get_mpz_t()))
    throw ContractError(d.get_str() + " does not divide the lcm period " + rho.get_str());
  return constituent_from_counts(signed_profile_counts(a, opts), a.dimension(), d);
}

QuasiPolynomial characteristic_quasipolynomial(const Arrangement& a, const SweepOptions& opts) {
  check_subset_budget(a, opts);
  const BigInt rho = lcm_period(a, opts);
  if (!fits_u64(rho)) throw ResourceError("lcm period " + rho.get_str() + " does not fit in 64 bits", 0, 0);
  const auto counts = signed_profile_counts(a, opts);
  QuasiPolynomial chi;
  chi.degree = a.dimension();
  chi.period = to_u64(rho);
  for (auto d : divisors(chi.period)) {
    IntPolynomial p = constituent_from_counts(counts, chi.degree, from_u64(d));
    if (!p.is_monic() || *p.degree() != chi.degree)
      throw IntegrityError("subset-sum constituent P_" + std::to_string(d) + " is not monic of degree m");
    chi.constituents.emplace(d, std::move(p));
  }
  return chi;
}

IntPolynomial constituent_via_interpolation(const PointSource& points, std::uint64_t d,
                                            std::uint64_t rho, std::size_t m) {
  if (d == 0 || rho == 0) throw ContractError("residue and period must be positive");
  std::vector<mpq_class> xs(m + 1), ys(m + 1);
  for (std::size_t s = 0; s <= m; ++s) {
    BigInt q = from_u64(d) + from_u64(rho) * static_cast<unsigned long>(s);
    xs[s] = mpq_class(q);
    ys[s] = mpq_class(points(q));
  }
  // Lagrange: sum_i y_i prod_{j != i} (t - x_j) / (x_i - x_j), expanded exactly.
  std::vector<mpq_class> coeffs(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (std::size_t j = 0; j <= m; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    mpq_class scale = ys[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  std::vector<BigInt> ints(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    coeffs[k].canonicalize();
    if (coeffs[k].get_den() != 1)
      throw IntegrityError("interpolated constituent for residue " + std::to_string(d) + " mod " +
                           std::to_string(rho) + " has a non-integral coefficient " +
                           coeffs[k].get_str() + " (wrong period or point source?)");
    ints[k] = coeffs[k].get_num();
  }
  IntPolynomial p(std::move(ints));
  if (p.is_zero() || *p.degree() != m || !p.is_monic())
    throw IntegrityError("interpolated constituent for residue " + std::to_string(d) + " mod " +
                         std::to_string(rho) + " is not monic of degree " + std::to_string(m) +
                         ": " + p.to_string());
  return p;
}

QuasiPolynomial quasipolynomial_via_interpolation(const PointSource& points, std::uint64_t rho,
                                                  std::size_t m) {
  QuasiPolynomial chi;
  chi.degree = m;
  chi.period = rho;
  for (std::uint64_t r = 1; r <= rho; ++r) {
    IntPolynomial p = constituent_via_interpolation(points, r, rho, m);
    const std::uint64_t g = std::gcd(rho, r);
    auto [it, fresh] = chi.constituents.emplace(g, p);
    if (!fresh && it->second != p)
      throw IntegrityError("residues " + std::to_string(g) + " and " + std::to_string(r) + " mod " +
                           std::to_string(rho) + " share gcd " + std::to_string(g) +
                           " but have different constituents");
  }
  return chi;
}

QuasiPolynomial minimum_period(const QuasiPolynomial& chi) {
  const std::uint64_t rho = chi.period;
  auto at = [&](std::uint64_t q) -> const IntPolynomial& { return chi.constituent(std::gcd(rho, q)); };
  for (auto cand : divisors(rho)) {
    bool ok = true;
    for (std::uint64_t q = 1; q <= rho && ok; ++q) ok = at(q) == at(q + cand);
    if (!ok) continue;
    QuasiPolynomial out;
    out.degree = chi.degree;
    out.period = cand;
    for (auto d : divisors(cand)) out.constituents.emplace(d, at(d));
    for (std::uint64_t q = 1; q <= rho; ++q)
      if (out.constituent(std::gcd(cand, q)) != at(q))
        throw IntegrityError("collapsed quasi-polynomial is not gcd-indexed");
    return out;
  }
  return chi;  // unreachable: rho itself always qualifies
}

std::optional<std::size_t> difference_degree(const IntPolynomial& a, const IntPolynomial& b) {
  return (a - b).degree();
}

IntPolynomial relation_polynomial(const QuasiPolynomial& chi, std::uint64_t d, std::uint64_t d2) {
  return chi.constituent(d) + chi.constituent(d2) - chi.constituent(d * d2) - chi.constituent(1);
}

std::optional<std::size_t> relation_degree(const QuasiPolynomial& chi, std::uint64_t d, std::uint64_t d2) {
  return relation_polynomial(chi, d, d2).degree();
}

std::string to_string(const QuasiPolynomial& chi) {
  std::ostringstream os;
  for (const auto& [d, p] : chi.constituents) os << "P_" << d << "(q) = " << p.to_string('q') << '\n';
  return os.str();
}

}  // namespace quasichar
