#pragma once

#include <istream>
#include <string>

#include "quasichar/arrangement.hpp"
#include "quasichar/genfunc.hpp"
#include "quasichar/quasipoly.hpp"

namespace quasichar {

/// Matrix file: first non-comment line "m n", then m rows of n integers
/// separated by single spaces. Lines starting with '#' and blank lines are
/// skipped. Throws InputError with the offending line number.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& s);

/// Reads a matrix file; the label is the path.
Arrangement load_arrangement(const std::string& path);

/// {"m": int, "period": int, "constituents": {"<d>": [c_m, ..., c_0]}},
/// coefficients as decimal strings.
std::string to_json(const QuasiPolynomial& chi);
QuasiPolynomial quasipoly_from_json(const std::string& text);

/// {"numerator": [c_0, c_1, ...], "denominator": [[a, b], ...]},
/// coefficients as decimal strings.
std::string to_json(const RationalGF& gf);
RationalGF gf_from_json(const std::string& text);

}  // namespace quasichar
