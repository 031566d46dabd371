#include "quasichar/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "quasichar/detail/subset_walk.hpp"
#include "quasichar/errors.hpp"

namespace quasichar {

namespace {

// Odometer over z_1..z_{m-1} with z_0 fixed; zS is updated by adding one
// row of S per digit step, and a wrapping digit has added its row q times.
std::uint64_t count_slice(const std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t q,
                          std::uint32_t z0) {
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<std::uint32_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(z0) * rows[0][i]) % q);
  std::vector<std::uint32_t> digits(m, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool off = true;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] == 0) {
        off = false;
        break;
      }
    count += off;
    std::size_t k = m;
    for (;;) {
      if (--k == 0) return count;
      const auto& row = rows[k];
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t s = v[i] + row[i];
        v[i] = s >= q ? s - q : s;
      }
      if (++digits[k] < q) break;
      digits[k] = 0;
    }
  }
}

}  // namespace

std::uint64_t count_complement(const Arrangement& a, std::uint64_t q, const OracleOptions& opts) {
  if (q == 0 || q >= (std::uint64_t{1} << 31)) throw InputError("oracle modulus must satisfy 1 <= q < 2^31");
  const std::size_t m = a.dimension();
  const std::size_t n = a.size();
  BigInt points = pow(from_u64(q), static_cast<unsigned long>(m));
  if (!fits_u64(points) || to_u64(points) > opts.point_budget) {
    std::ostringstream os;
    os << "oracle enumeration of " << points.get_str() << " points (q = " << q << ", m = " << m
       << ") exceeds the point budget of " << opts.point_budget;
    throw ResourceError(os.str(), points.get_d(), static_cast<long double>(opts.point_budget));
  }

  const auto qq = static_cast<std::uint32_t>(q);
  std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(n));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      rows[r][c] = static_cast<std::uint32_t>(mpz_fdiv_ui(a.matrix()(r, c).get_mpz_t(), qq));

  std::size_t workers = opts.threads ? opts.threads : default_thread_count();
  workers = std::max<std::size_t>(1, std::min<std::size_t>(workers, q));
  std::vector<std::uint64_t> partial(workers, 0);
  detail::run_workers(workers, [&](std::size_t w, std::size_t nw) {
    for (std::uint64_t z0 = w; z0 < q; z0 += nw) partial[w] += count_slice(rows, qq, static_cast<std::uint32_t>(z0));
  });
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace quasichar
