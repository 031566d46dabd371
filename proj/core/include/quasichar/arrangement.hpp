#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "quasichar/intmat.hpp"

namespace quasichar {

/// Knobs shared by every subset enumeration.
struct EnumerationOptions {
  /// Refuse to start when the planned number of subsets exceeds this.
  std::uint64_t subset_budget = std::uint64_t{1} << 30;
  /// Worker threads; 0 means default_thread_count().
  unsigned threads = 0;
};

/// QUASICHAR_THREADS if set and positive, else the hardware concurrency.
unsigned default_thread_count();

/// An m x n integral matrix without zero columns. Column i is the normal
/// vector of the i-th hyperplane.
class Arrangement {
 public:
  explicit Arrangement(IntMatrix matrix, std::string label = {});

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }
  std::size_t size() const noexcept { return matrix_.cols(); }

 private:
  IntMatrix matrix_;
  std::string label_;
};

struct SubsetProfile {
  std::vector<std::size_t> subset;  // sorted, 0-based
  std::size_t rank = 0;
  std::vector<BigInt> divisors;
  BigInt top = 1;  // e(J); 1 for the empty subset
};

/// Profile of the column submatrix S_J. Indices are 0-based; J may be empty.
SubsetProfile subset_profile(const Arrangement& a, std::span<const std::size_t> subset);

/// e(J, d) = prod_j gcd(e_{J,j}, d).
BigInt e_of_J_d(const SubsetProfile& p, const BigInt& d);

/// Sum_{k=1..s_max} C(n, k), saturating at UINT64_MAX.
std::uint64_t planned_subset_count(std::size_t n, std::size_t s_max);

/// For s = 1..s_max, the distinct values e(J) over nonempty |J| <= s.
/// Subsets are visited by size, lexicographically within a size.
std::map<std::size_t, std::set<BigInt>> e_sets_by_size(const Arrangement& a, std::size_t s_max,
                                                       const EnumerationOptions& opts = {});

/// lcm of e(J) over nonempty |J| <= min(m, n).
BigInt lcm_period(const Arrangement& a, const EnumerationOptions& opts = {});

/// lcm over every nonempty subset, with no size restriction. Only used to
/// confirm on small inputs that the restricted form loses nothing.
BigInt lcm_period_unrestricted(const Arrangement& a, const EnumerationOptions& opts = {});

/// Drops columns equal to an earlier column up to sign. |M_q| is unchanged.
Arrangement dedup_columns(const Arrangement& a);

}  // namespace quasichar
