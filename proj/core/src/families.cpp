#include "quasichar/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "quasichar/errors.hpp"

namespace quasichar {

namespace {

using Root = std::vector<long>;

struct Dynkin {
  std::vector<long> half_length;  // (alpha_i, alpha_i) / 2 in units of the shortest root
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Dynkin dynkin(char type, std::size_t m) {
  Dynkin d;
  d.half_length.assign(m, 1);
  auto chain = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i + 1 < to; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A':
      chain(0, m);
      break;
    case 'B':
      chain(0, m);
      for (std::size_t i = 0; i + 1 < m; ++i) d.half_length[i] = 2;
      break;
    case 'C':
      chain(0, m);
      d.half_length[m - 1] = 2;
      break;
    case 'D':
      chain(0, m - 1);
      d.edges.emplace_back(m - 3, m - 1);
      break;
    case 'E':
      d.edges = {{0, 2}, {2, 3}, {1, 3}};
      chain(3, m);
      break;
    case 'F':
      chain(0, 4);
      d.half_length = {2, 2, 1, 1};
      break;
    case 'G':
      d.edges = {{0, 1}};
      d.half_length = {3, 1};
      break;
  }
  return d;
}

/// Gram matrix (alpha_i, alpha_j) scaled so short roots have squared length 2.
std::vector<std::vector<long>> gram(const Dynkin& d) {
  const std::size_t m = d.half_length.size();
  std::vector<std::vector<long>> g(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) g[i][i] = 2 * d.half_length[i];
  for (auto [i, j] : d.edges) g[i][j] = g[j][i] = -std::max(d.half_length[i], d.half_length[j]);
  return g;
}

/// Positive roots by height, grown through alpha_i-strings: beta + alpha_i is a
/// root iff p - <beta, alpha_i^vee> > 0, with p the length of the downward string.
std::vector<Root> positive_roots(const Dynkin& d) {
  const std::size_t m = d.half_length.size();
  const auto g = gram(d);
  std::set<Root> all;
  std::vector<Root> level;
  for (std::size_t i = 0; i < m; ++i) {
    Root r(m, 0);
    r[i] = 1;
    level.push_back(r);
    all.insert(r);
  }
  std::vector<Root> ordered;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), std::greater<>());
    ordered.insert(ordered.end(), level.begin(), level.end());
    std::set<Root> next;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < m; ++i) {
        long pairing = 0;
        for (std::size_t j = 0; j < m; ++j) pairing += beta[j] * g[j][i];
        pairing /= d.half_length[i];
        long p = 0;
        for (Root down = beta; down[i] > 0;) {
          --down[i];
          if (!all.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Root up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    for (const auto& r : next) all.insert(r);
    level.assign(next.begin(), next.end());
  }
  return ordered;
}

void require_valid(char type, std::size_t rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 3; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw InputError(std::string("no irreducible root system of type ") + type + " and rank " +
                     std::to_string(rank));
}

}  // namespace

std::string RootSystemSpec::label() const { return std::string(1, type) + ":" + std::to_string(rank); }

RootSystemSpec root_system_spec(char type, std::size_t rank) {
  require_valid(type, rank);
  const auto roots = positive_roots(dynkin(type, rank));

  RootSystemSpec spec;
  spec.type = type;
  spec.rank = rank;
  spec.matrix = IntMatrix(rank, roots.size());
  for (std::size_t c = 0; c < roots.size(); ++c)
    for (std::size_t r = 0; r < rank; ++r) spec.matrix(r, c) = roots[c][r];
  for (long x : roots.back()) spec.marks.push_back(static_cast<std::size_t>(x));
  spec.coxeter = 1 + std::accumulate(spec.marks.begin(), spec.marks.end(), std::size_t{0});
  return spec;
}

RationalGF root_system_gf(const RootSystemSpec& spec) {
  BigInt scale = factorial(spec.rank);
  std::map<std::size_t, std::size_t> factors{{1, 1}};
  for (auto n : spec.marks) {
    scale *= static_cast<unsigned long>(n);
    ++factors[n];
  }
  RationalGF gf{IntPolynomial::monomial(scale, spec.coxeter), {}};
  for (auto [a, b] : factors) gf.denominator.push_back({a, b});
  return gf;
}

QuasiPolynomial root_system_quasipolynomial(const RootSystemSpec& spec) {
  std::size_t rho = 1;
  for (auto n : spec.marks) rho = std::lcm(rho, n);
  const std::size_t m = spec.rank;
  const RationalGF canonical = to_canonical(root_system_gf(spec), rho, m);

  std::vector<std::vector<BigInt>> slices(rho + 1);
  for (std::size_t d = 1; d <= rho; ++d) {
    slices[d] = series_expand(residue_slice(canonical, d), d + m * rho);
    for (std::size_t q = 1; q <= slices[d].size(); ++q)
      if (q % rho != d % rho && sgn(slices[d][q - 1]) != 0)
        throw IntegrityError("residue slice leaked outside its class");
  }
  PointSource points = [&](const BigInt& q) {
    const std::size_t qi = to_u64(q);
    std::size_t d = qi % rho;
    if (d == 0) d = rho;
    return slices[d].at(qi - 1);
  };
  return quasipolynomial_via_interpolation(points, rho, m);
}

Arrangement midhyperplane(std::size_t m) {
  if (m < 4) throw InputError("mid-hyperplane arrangements need m >= 4");
  std::vector<std::vector<long>> cols;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<long> v(m, 0);
      v[i] = 1;
      v[j] = -1;
      cols.push_back(v);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = i + 1; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
          if (j == k || j == l) continue;
          std::vector<long> v(m, 0);
          v[i] += 1;
          v[j] += 1;
          v[k] -= 1;
          v[l] -= 1;
          cols.push_back(v);
        }
  IntMatrix s(m, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) s(r, c) = cols[c][r];
  return Arrangement(std::move(s), "mid:" + std::to_string(m));
}

std::string FamilyId::to_string() const {
  if (kind == Kind::MidHyperplane) return "mid:" + std::to_string(rank);
  return std::string(1, type) + ":" + std::to_string(rank);
}

FamilyId parse_family_id(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 == text.size())
    throw InputError("family id must look like A:3 or mid:5, got '" + text + "'");
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  if (!std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }) || tail.size() > 6)
    throw InputError("family rank must be a positive integer, got '" + tail + "'");
  FamilyId id;
  id.rank = std::stoul(tail);
  if (head == "mid") {
    id.kind = FamilyId::Kind::MidHyperplane;
    if (id.rank < 4) throw InputError("mid-hyperplane arrangements need m >= 4");
    return id;
  }
  if (head.size() != 1) throw InputError("unknown family '" + head + "'");
  id.type = head[0];
  require_valid(id.type, id.rank);
  return id;
}

Arrangement family_arrangement(const FamilyId& id) {
  if (id.kind == FamilyId::Kind::MidHyperplane) return midhyperplane(id.rank);
  return root_system_spec(id.type, id.rank).arrangement();
}

}  // namespace quasichar
