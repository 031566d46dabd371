#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quasichar/arrangement.hpp"
#include "quasichar/genfunc.hpp"
#include "quasichar/quasipoly.hpp"

namespace quasichar {

/// Irreducible crystallographic root system with its positive roots written
/// in the simple-root basis (Bourbaki numbering, except G2 where the long
/// simple root comes first so the marks read 2, 3).
struct RootSystemSpec {
  char type = 'A';  // A B C D E F G
  std::size_t rank = 0;
  std::vector<std::size_t> marks;  // coefficients of the highest root
  std::size_t coxeter = 0;         // 1 + sum of marks
  IntMatrix matrix;                // rank x |R+|, ordered by height, then descending lexicographically

  std::string label() const;
  Arrangement arrangement() const { return Arrangement(matrix, label()); }
};

/// Throws InputError unless: A m>=1, B m>=2, C m>=3, D m>=4, E 6..8, F 4, G 2.
RootSystemSpec root_system_spec(char type, std::size_t rank);

/// (n_1 ... n_m)(m!) t^h / ((1 - t) prod_i (1 - t^{n_i})), factors grouped.
RationalGF root_system_gf(const RootSystemSpec& spec);

/// Quasi-polynomial read off the closed-form generating function: period
/// seeded as lcm(marks), each residue class sliced and interpolated.
QuasiPolynomial root_system_quasipolynomial(const RootSystemSpec& spec);

/// Columns alpha_i - alpha_j (i < j), then alpha_i + alpha_j - alpha_k - alpha_l
/// over i < j, i < k < l, j not in {k, l}; both blocks lexicographic. m >= 4.
Arrangement midhyperplane(std::size_t m);

/// "A:3", "E:6", "mid:5", ...
struct FamilyId {
  enum class Kind { RootSystem, MidHyperplane } kind = Kind::RootSystem;
  char type = 'A';
  std::size_t rank = 0;

  std::string to_string() const;
};

FamilyId parse_family_id(const std::string& text);

Arrangement family_arrangement(const FamilyId& id);

}  // namespace quasichar
