#pragma once

#include <cstdint>

namespace pcurv {

/// Arithmetic in the prime field F_p, p < 2^31, on canonical residues.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Inverse of a nonzero residue; throws InternalError on zero.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

/// Reduce a signed integer into [0, p).
inline std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Symmetric lift into (-p/2, p/2].
inline long long lift(std::uint32_t a, std::uint32_t p) {
  return a > p / 2 ? static_cast<long long>(a) - p : static_cast<long long>(a);
}

bool is_prime(std::uint64_t n);

}  // namespace fp
}  // namespace pcurv
