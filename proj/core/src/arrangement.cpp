#include "quasichar/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "quasichar/detail/subset_walk.hpp"
#include "quasichar/errors.hpp"

namespace quasichar {

unsigned default_thread_count() {
  if (const char* env = std::getenv("QUASICHAR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

std::size_t worker_count(const EnumerationOptions& opts, std::size_t n) {
  std::size_t t = opts.threads ? opts.threads : default_thread_count();
  return std::max<std::size_t>(1, std::min(t, n));
}

void check_budget(std::uint64_t planned, const EnumerationOptions& opts, const char* what) {
  if (planned > opts.subset_budget) {
    std::ostringstream os;
    os << what << ": planned " << planned << " subsets exceeds the subset budget of "
       << opts.subset_budget << "; raise the budget to proceed";
    throw ResourceError(os.str(), static_cast<long double>(planned),
                        static_cast<long double>(opts.subset_budget));
  }
}

template <class Int>
std::vector<std::set<BigInt>> tops_by_exact_size(const Arrangement& a, std::size_t s_max,
                                                 std::size_t workers) {
  const auto cols = detail::columns_as<Int>(a.matrix());
  std::vector<std::vector<std::set<BigInt>>> partial(workers);
  detail::run_workers(workers, [&](std::size_t w, std::size_t nw) {
    std::vector<std::set<Int>> local(s_max + 1);
    detail::walk_subsets<Int>(cols, a.dimension(), s_max, w, nw,
                              [&](const detail::HermiteLattice<Int>& lat, std::size_t size) {
                                local[size].insert(detail::top_divisor(lat));
                              });
    auto& out = partial[w];
    out.resize(s_max + 1);
    for (std::size_t s = 0; s <= s_max; ++s)
      for (const auto& v : local[s]) out[s].insert(BigInt(detail::to_big(v)));
  });
  std::vector<std::set<BigInt>> merged(s_max + 1);
  for (const auto& p : partial)
    for (std::size_t s = 0; s <= s_max; ++s) merged[s].insert(p[s].begin(), p[s].end());
  return merged;
}

std::vector<std::set<BigInt>> tops_by_exact_size(const Arrangement& a, std::size_t s_max,
                                                 const EnumerationOptions& opts) {
  const std::size_t workers = worker_count(opts, a.size());
  try {
    return tops_by_exact_size<std::int64_t>(a, s_max, workers);
  } catch (const detail::Overflow&) {
    return tops_by_exact_size<BigInt>(a, s_max, workers);
  }
}

}  // namespace

Arrangement::Arrangement(IntMatrix matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0)
    throw InputError("an arrangement needs at least one row and one column");
  for (std::size_t c = 0; c < matrix_.cols(); ++c)
    if (matrix_.column_is_zero(c))
      throw InputError("column " + std::to_string(c + 1) + " is the zero vector");
}

SubsetProfile subset_profile(const Arrangement& a, std::span<const std::size_t> subset) {
  SubsetProfile p;
  p.subset.assign(subset.begin(), subset.end());
  std::sort(p.subset.begin(), p.subset.end());
  if (std::adjacent_find(p.subset.begin(), p.subset.end()) != p.subset.end())
    throw InputError("subset contains a repeated column index");
  for (auto j : p.subset)
    if (j >= a.size()) throw InputError("column index " + std::to_string(j) + " out of range");
  if (p.subset.empty()) return p;
  SmithProfile s = smith_profile(a.matrix().select_columns(p.subset));
  p.rank = s.rank;
  p.top = s.top();
  p.divisors = std::move(s.divisors);
  return p;
}

BigInt e_of_J_d(const SubsetProfile& p, const BigInt& d) {
  BigInt out = 1;
  for (const auto& e : p.divisors) out *= gcd(e, d);
  return out;
}

std::uint64_t planned_subset_count(std::size_t n, std::size_t s_max) {
  BigInt total = 0;
  for (std::size_t k = 1; k <= std::min(n, s_max); ++k) total += binomial(n, k);
  return fits_u64(total) ? to_u64(total) : std::numeric_limits<std::uint64_t>::max();
}

std::map<std::size_t, std::set<BigInt>> e_sets_by_size(const Arrangement& a, std::size_t s_max,
                                                       const EnumerationOptions& opts) {
  const std::size_t limit = std::min(a.dimension(), a.size());
  if (s_max > limit)
    throw InputError("s_max = " + std::to_string(s_max) + " exceeds min(m, n) = " +
                     std::to_string(limit));
  check_budget(planned_subset_count(a.size(), s_max), opts, "e-set enumeration");
  auto exact = tops_by_exact_size(a, s_max, opts);
  std::map<std::size_t, std::set<BigInt>> out;
  std::set<BigInt> acc;
  for (std::size_t s = 1; s <= s_max; ++s) {
    acc.insert(exact[s].begin(), exact[s].end());
    out[s] = acc;
  }
  return out;
}

BigInt lcm_period(const Arrangement& a, const EnumerationOptions& opts) {
  const std::size_t s_max = std::min(a.dimension(), a.size());
  auto sets = e_sets_by_size(a, s_max, opts);
  BigInt l = 1;
  for (const auto& e : sets[s_max]) l = lcm(l, e);
  return l;
}

BigInt lcm_period_unrestricted(const Arrangement& a, const EnumerationOptions& opts) {
  check_budget(planned_subset_count(a.size(), a.size()), opts, "unrestricted lcm enumeration");
  auto exact = tops_by_exact_size(a, a.size(), opts);
  BigInt l = 1;
  for (const auto& s : exact)
    for (const auto& e : s) l = lcm(l, e);
  return l;
}

Arrangement dedup_columns(const Arrangement& a) {
  const IntMatrix& s = a.matrix();
  std::vector<std::size_t> keep;
  std::set<std::vector<BigInt>> seen;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    auto col = s.column(c);
    auto lead = std::find_if(col.begin(), col.end(), [](const BigInt& x) { return sgn(x) != 0; });
    if (sgn(*lead) < 0)
      for (auto& x : col) x = -x;
    if (seen.insert(col).second) keep.push_back(c);
  }
  std::string label = a.label().empty() ? "arrangement" : a.label();
  label += " (dedup of " + std::to_string(s.cols()) + " columns)";
  return Arrangement(s.select_columns(keep), std::move(label));
}

}  // namespace quasichar
