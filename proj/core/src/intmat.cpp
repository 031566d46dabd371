#include "quasichar/intmat.hpp"

#include <sstream>
#include <stdexcept>

#include "quasichar/detail/smith.hpp"
#include "quasichar/errors.hpp"

namespace quasichar {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("matrix entry count does not match its shape");
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return from_rows(out);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  std::vector<BigInt> e;
  e.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc) throw InputError("ragged matrix rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return IntMatrix(nr, nc, std::move(e));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool IntMatrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (sgn((*this)(r, c)) != 0) return false;
  return true;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw InputError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool IntMatrix::to_int64(std::vector<std::int64_t>& out) const {
  out.resize(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].fits_slong_p()) return false;
    out[i] = entries_[i].get_si();
  }
  return true;
}

BigInt SmithProfile::gcd_product(const BigInt& d) const {
  BigInt p = 1;
  for (const auto& e : divisors) p *= gcd(e, d);
  return p;
}

namespace {

SmithProfile profile_from(const std::vector<BigInt>& diag) {
  return SmithProfile{diag.size(), diag};
}

}  // namespace

SmithProfile smith_profile_bigint(const IntMatrix& m) {
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  return profile_from(detail::smith_diagonal<BigInt>(std::move(a), m.rows(), m.cols()));
}

SmithProfile smith_profile(const IntMatrix& m) {
  std::vector<std::int64_t> small;
  if (m.to_int64(small)) {
    try {
      auto diag = detail::smith_diagonal<std::int64_t>(std::move(small), m.rows(), m.cols());
      std::vector<BigInt> out;
      out.reserve(diag.size());
      for (auto d : diag) out.push_back(from_i64(d));
      return profile_from(out);
    } catch (const detail::Overflow&) {
    }
  }
  return smith_profile_bigint(m);
}

std::size_t rank(const IntMatrix& m) { return smith_profile(m).rank; }

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

std::string to_string(const SmithProfile& p) {
  std::ostringstream os;
  os << "rank " << p.rank << " [";
  for (std::size_t i = 0; i < p.divisors.size(); ++i) os << (i ? ", " : "") << p.divisors[i].get_str();
  os << ']';
  return os.str();
}

}  // namespace quasichar
