#pragma once

// Arithmetic shims that let the elimination kernels run either on machine
// words (overflow-checked) or on GMP integers with the same source.

#include <cstdint>
#include <cstdlib>
#include <limits>

#include "quasichar/integer.hpp"

namespace quasichar::detail {

/// Thrown by the int64 kernels; callers catch it and rerun on BigInt.
struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline int sign(std::int64_t a) { return (a > 0) - (a < 0); }

inline bool is_zero(std::int64_t a) { return a == 0; }

/// Floor division, so remainders of positive divisors land in [0, b).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == -1) return neg(a);
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t rem(std::int64_t a, std::int64_t b) { return a % b; }

inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt neg(const BigInt& a) { return -a; }
inline BigInt abs(const BigInt& a) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}
inline int sign(const BigInt& a) { return sgn(a); }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt rem(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt to_big(std::int64_t a) { return from_i64(a); }
inline const BigInt& to_big(const BigInt& a) { return a; }

template <class Int>
struct ExtGcd {
  Int g, x, y;  // g = x*a + y*b, g >= 0
};

template <class Int>
ExtGcd<Int> ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (!is_zero(b)) {
    Int q = floor_div(a, b);
    Int r = sub(a, mul(q, b));
    a = b;
    b = r;
    Int t = sub(x0, mul(q, x1));
    x0 = x1;
    x1 = t;
    t = sub(y0, mul(q, y1));
    y0 = y1;
    y1 = t;
  }
  if (sign(a) < 0) {
    a = neg(a);
    x0 = neg(x0);
    y0 = neg(y0);
  }
  return {a, x0, y0};
}

template <class Int>
Int gcd_of(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (!is_zero(b)) {
    Int r = rem(a, b);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace quasichar::detail
