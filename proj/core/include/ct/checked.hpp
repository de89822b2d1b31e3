// Checked 64-bit integer arithmetic. Orbit values and piece coefficients grow
// geometrically for infinite-order products, so every arithmetic path that can
// grow goes through these helpers; overflow raises instead of wrapping.
#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ct {

using Int = std::int64_t;

// Arithmetic exceeded the configured integer width.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant that should be unreachable was violated.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
// Magnitude cap; INT64_MAX unless narrowed via set_int_bits (CT_MAX_INT_BITS).
inline Int& int_limit() {
  static Int limit = std::numeric_limits<Int>::max();
  return limit;
}
}  // namespace detail

// Caps values at |v| <= 2^(bits-1)-1. bits in [8, 64]. Used by tests and the
// CT_MAX_INT_BITS environment variable to exercise overflow paths.
inline void set_int_bits(int bits) {
  if (bits < 8 || bits > 64) throw std::invalid_argument("integer width must be in [8, 64] bits");
  detail::int_limit() = (bits == 64) ? std::numeric_limits<Int>::max()
                                     : ((Int{1} << (bits - 1)) - 1);
}

inline Int int_limit() { return detail::int_limit(); }

inline Int checked(Int v) {
  const Int lim = detail::int_limit();
  if (v > lim || v < -lim) throw OverflowError("integer exceeds " + std::to_string(lim));
  return v;
}

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition overflow");
  return checked(r);
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction overflow");
  return checked(r);
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication overflow");
  return checked(r);
}

inline Int neg(Int a) { return sub(0, a); }

// a / b with proof that b divides a; inexactness is a logic bug, not input error.
inline Int exact_div(Int a, Int b) {
  if (b == 0 || a % b != 0) throw InternalError("inexact division");
  return a / b;
}

// Representative of x mod m in [0, m). m >= 1.
inline Int mod_floor(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return mul(a / std::gcd(a, b), b < 0 ? -b : b);
}

inline Int pow_checked(Int base, Int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Int r = 1;
  for (Int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

struct EgcdResult {
  Int g;  // gcd(a, b) >= 0
  Int x;  // a*x + b*y == g
  Int y;
};

inline EgcdResult egcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

}  // namespace ct
