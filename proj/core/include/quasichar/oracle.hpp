#pragma once

#include <cstdint>

#include "quasichar/arrangement.hpp"

namespace quasichar {

struct OracleOptions {
  /// Refuse when q^m exceeds this many points.
  std::uint64_t point_budget = 1'000'000'000;
  /// Worker threads; 0 means default_thread_count().
  unsigned threads = 0;
};

/// |M_q(S)|: points z of (Z/q)^m with every coordinate of zS nonzero mod q,
/// counted by direct enumeration. Requires 1 <= q < 2^31.
std::uint64_t count_complement(const Arrangement& a, std::uint64_t q, const OracleOptions& opts = {});

}  // namespace quasichar
