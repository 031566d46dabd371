#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "quasichar/detail/lattice.hpp"
#include "quasichar/intmat.hpp"

namespace quasichar::detail {

template <class Int>
std::vector<std::vector<Int>> columns_as(const IntMatrix& m);

template <>
inline std::vector<std::vector<BigInt>> columns_as<BigInt>(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

template <>
inline std::vector<std::vector<std::int64_t>> columns_as<std::int64_t>(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.cols(), std::vector<std::int64_t>(m.rows()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, c).fits_slong_p()) throw Overflow{};
      out[c][r] = m(r, c).get_si();
    }
  return out;
}

/// Largest elementary divisor of the lattice (1 when empty).
template <class Int>
Int top_divisor(const HermiteLattice<Int>& lat) {
  if (lat.rank() == 0 || lat.unit_pivots()) return Int(1);
  return lat.elementary_divisors().back();
}

/// Depth-first walk over nonempty column subsets of size <= max_size, in
/// lexicographic order. Only subsets whose smallest index is congruent to
/// `worker` modulo `workers` are visited, so disjoint workers cover every
/// subset exactly once. `visit(lattice, size)` sees the Hermite form of the
/// lattice spanned by the subset.
template <class Int, class Visit>
void walk_subsets(const std::vector<std::vector<Int>>& cols, std::size_t dim, std::size_t max_size,
                  std::size_t worker, std::size_t workers, Visit&& visit) {
  const std::size_t n = cols.size();
  if (max_size == 0) return;
  std::vector<HermiteLattice<Int>> stack(max_size + 1, HermiteLattice<Int>(dim));

  auto rec = [&](auto& self, std::size_t start, std::size_t depth) -> void {
    for (std::size_t i = start; i < n; ++i) {
      stack[depth + 1] = stack[depth];
      stack[depth + 1].insert(cols[i]);
      visit(stack[depth + 1], depth + 1);
      if (depth + 1 < max_size) self(self, i + 1, depth + 1);
    }
  };

  for (std::size_t first = worker; first < n; first += workers) {
    stack[1] = stack[0];
    stack[1].insert(cols[first]);
    visit(stack[1], std::size_t{1});
    if (max_size > 1) rec(rec, first + 1, 1);
  }
}

/// Runs fn(worker, workers) on `workers` threads (inline when workers == 1)
/// and rethrows the first exception by worker index.
template <class Fn>
void run_workers(std::size_t workers, Fn&& fn) {
  if (workers <= 1) {
    fn(std::size_t{0}, std::size_t{1});
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          fn(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace quasichar::detail
