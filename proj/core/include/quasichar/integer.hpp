#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace quasichar {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool fits_u64(const BigInt& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& x) {
  // mpz_get_ui is only 64-bit on LP64, which every supported target is.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(x.get_mpz_t());
}

inline BigInt from_u64(std::uint64_t x) {
  static_assert(sizeof(unsigned long) == 8);
  return BigInt(static_cast<unsigned long>(x));
}

inline BigInt from_i64(std::int64_t x) {
  static_assert(sizeof(long) == 8);
  return BigInt(static_cast<long>(x));
}

}  // namespace quasichar
