#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "quasichar/detail/int_ops.hpp"
#include "quasichar/detail/smith.hpp"

namespace quasichar::detail {

/// Sublattice of Z^dim kept in row-style Hermite normal form: rows sorted by
/// strictly increasing pivot column, positive pivots, entries above each pivot
/// reduced into [0, pivot). The form is unique per lattice, so it doubles as
/// a hash key.
template <class Int>
class HermiteLattice {
 public:
  explicit HermiteLattice(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<Int>& rows() const noexcept { return rows_; }

  void insert(std::span<const Int> vec) {
    std::vector<Int> v(vec.begin(), vec.end());
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim_; ++col) {
      while (r < pivots_.size() && pivots_[r] < col) ++r;
      if (is_zero(v[col])) continue;
      if (r == pivots_.size() || pivots_[r] != col) {
        if (sign(v[col]) < 0)
          for (auto& x : v) x = neg(x);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r * dim_), v.begin(), v.end());
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(r), col);
        break;
      }
      Int* row = &rows_[r * dim_];
      auto [g, x, y] = ext_gcd(row[col], v[col]);
      Int a = floor_div(row[col], g);
      Int b = floor_div(v[col], g);
      for (std::size_t c = col; c < dim_; ++c) {
        Int nr = add(mul(x, row[c]), mul(y, v[c]));
        v[c] = sub(mul(a, v[c]), mul(b, row[c]));
        row[c] = nr;
      }
    }
    reduce();
  }

  /// All pivots equal one, hence every elementary divisor is one.
  bool unit_pivots() const noexcept {
    for (std::size_t r = 0; r < pivots_.size(); ++r)
      if (!(rows_[r * dim_ + pivots_[r]] == 1)) return false;
    return true;
  }

  /// Elementary divisors of any generating matrix of this lattice.
  std::vector<Int> elementary_divisors() const {
    return smith_diagonal<Int>(rows_, rank(), dim_);
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ rank();
    for (const auto& x : rows_) h = (h ^ hash_entry(x)) * 1099511628211ull;
    return h;
  }

  friend bool operator==(const HermiteLattice& a, const HermiteLattice& b) {
    return a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  static std::size_t hash_entry(std::int64_t x) noexcept { return std::hash<std::int64_t>{}(x); }
  static std::size_t hash_entry(const BigInt& x) noexcept {
    return mpz_fdiv_ui(x.get_mpz_t(), 4294967291ul) * 2654435761u + static_cast<std::size_t>(sgn(x) + 1);
  }

  void reduce() {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const std::size_t p = pivots_[r];
      const Int piv = rows_[r * dim_ + p];
      for (std::size_t i = 0; i < r; ++i) {
        Int& e = rows_[i * dim_ + p];
        if (is_zero(e)) continue;
        Int q = floor_div(e, piv);
        if (is_zero(q)) continue;
        for (std::size_t c = p; c < dim_; ++c)
          rows_[i * dim_ + c] = sub(rows_[i * dim_ + c], mul(q, rows_[r * dim_ + c]));
      }
    }
  }

  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<Int> rows_;
};

template <class Int>
struct LatticeHash {
  std::size_t operator()(const HermiteLattice<Int>& l) const noexcept { return l.hash(); }
};

}  // namespace quasichar::detail
