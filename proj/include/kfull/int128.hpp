#pragma once

// 128-bit helpers. Interval endpoints such as (n+2)^k leave the 64-bit range
// quickly, so every k-th power in the library is formed here with overflow checks.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kfull {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

inline bool mul_overflows(u128 a, u128 b, u128& out) {
  return __builtin_mul_overflow(a, b, &out);
}

inline u128 checked_mul(u128 a, u128 b) {
  u128 out;
  if (mul_overflows(a, b, out)) throw std::overflow_error("128-bit multiplication overflow");
  return out;
}

inline u128 checked_add(u128 a, u128 b) {
  u128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit addition overflow");
  return out;
}

/// base^e, throwing std::overflow_error when the result exceeds 128 bits.
inline u128 checked_pow(u128 base, unsigned e) {
  u128 result = 1;
  for (unsigned i = 0; i < e; ++i) result = checked_mul(result, base);
  return result;
}

/// base^e if it fits, otherwise nothing (returns false).
inline bool try_pow(u128 base, unsigned e, u128& out) {
  u128 result = 1;
  for (unsigned i = 0; i < e; ++i)
    if (mul_overflows(result, base, result)) return false;
  out = result;
  return true;
}

/// floor(x^(1/k)) for k >= 1.
u128 iroot(u128 x, unsigned k);

/// Smallest r with r^k >= x.
u128 iroot_ceil(u128 x, unsigned k);

std::string to_string(u128 v);
u128 parse_u128(const std::string& s);

inline long double to_long_double(u128 v) { return static_cast<long double>(v); }

}  // namespace kfull
