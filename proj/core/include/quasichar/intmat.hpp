#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "quasichar/integer.hpp"

namespace quasichar {

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  /// Row-list literal; every row must have the same length.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const BigInt> entries() const noexcept { return entries_; }

  std::vector<BigInt> column(std::size_t c) const;
  bool column_is_zero(std::size_t c) const;

  /// Columns selected by `cols`, in the given order.
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix transposed() const;

  /// Entries as machine words, or false if any entry does not fit.
  bool to_int64(std::vector<std::int64_t>& out) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Rank and elementary divisors e_1 | e_2 | ... | e_rank (all positive).
struct SmithProfile {
  std::size_t rank = 0;
  std::vector<BigInt> divisors;

  /// Largest elementary divisor; 1 for rank 0.
  BigInt top() const { return divisors.empty() ? BigInt(1) : divisors.back(); }

  /// prod_j gcd(e_j, d).
  BigInt gcd_product(const BigInt& d) const;

  friend bool operator==(const SmithProfile&, const SmithProfile&) = default;
  friend auto operator<=>(const SmithProfile& a, const SmithProfile& b) {
    if (a.rank != b.rank) return a.rank <=> b.rank;
    for (std::size_t i = 0; i < a.divisors.size(); ++i) {
      int c = cmp(a.divisors[i], b.divisors[i]);
      if (c != 0) return c <=> 0;
    }
    return std::strong_ordering::equal;
  }
};

/// Elementary divisors by elimination; machine words first, GMP on overflow.
SmithProfile smith_profile(const IntMatrix& m);

/// Same result, always computed on GMP integers (used to cross-check the fast path).
SmithProfile smith_profile_bigint(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const SmithProfile& p);

}  // namespace quasichar
