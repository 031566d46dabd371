#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quasichar/detail/int_ops.hpp"

namespace quasichar::detail {

/// Nonzero Smith diagonal of a rows x cols matrix (row-major, consumed).
/// Pivots on a smallest-magnitude entry; when the pivot fails to divide the
/// trailing block, the offending row is folded into the pivot row.
template <class Int>
std::vector<Int> smith_diagonal(std::vector<Int> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };
  std::vector<Int> diag;
  const std::size_t n = rows < cols ? rows : cols;

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      Int best{};
      for (std::size_t r = k; r < rows; ++r)
        for (std::size_t c = k; c < cols; ++c) {
          const Int& v = at(r, c);
          if (is_zero(v)) continue;
          Int av = abs(v);
          if (pr == rows || av < best) {
            best = av;
            pr = r;
            pc = c;
            if (best == 1) goto found;
          }
        }
    found:
      if (pr == rows) return diag;  // trailing block is zero
      if (pr != k)
        for (std::size_t c = k; c < cols; ++c) std::swap(at(k, c), at(pr, c));
      if (pc != k)
        for (std::size_t r = k; r < rows; ++r) std::swap(at(r, k), at(r, pc));

      const Int piv = at(k, k);
      bool clean = true;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (is_zero(at(r, k))) continue;
        Int q = floor_div(at(r, k), piv);
        for (std::size_t c = k; c < cols; ++c) at(r, c) = sub(at(r, c), mul(q, at(k, c)));
        if (!is_zero(at(r, k))) clean = false;
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (is_zero(at(k, c))) continue;
        Int q = floor_div(at(k, c), piv);
        for (std::size_t r = k; r < rows; ++r) at(r, c) = sub(at(r, c), mul(q, at(r, k)));
        if (!is_zero(at(k, c))) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; re-pivot

      // Divisibility repair.
      std::size_t bad = rows;
      for (std::size_t r = k + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = k + 1; c < cols; ++c)
          if (!is_zero(rem(at(r, c), piv))) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = k; c < cols; ++c) at(k, c) = add(at(k, c), at(bad, c));
    }
    diag.push_back(abs(at(k, k)));
  }
  return diag;
}

}  // namespace quasichar::detail
