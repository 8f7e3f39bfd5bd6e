#pragma once

#include <cstdint>

#include "tautilt/errors.hpp"

namespace tautilt {

inline bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t neg_mod(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}

inline uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t r = 1, base = a % p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
  if (a == 0) throw FieldError("division by zero in GF(p)");
  return pow_mod(a, p - 2, p);
}

// Reduce a signed integer coefficient into GF(p).
inline uint32_t reduce_mod(long long c, uint32_t p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

}  // namespace tautilt
