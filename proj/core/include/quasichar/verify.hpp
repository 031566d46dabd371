#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quasichar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed;
  /// oracle-grid: number of random matrices and the largest q.
  std::size_t grid_matrices = 200;
  std::uint64_t grid_max_q = 20;
  unsigned threads = 0;
};

/// root-systems, m5-relations, oracle-grid, cross-path, bcd, prime-power,
/// fourier, degree-bounds.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace quasichar
