#include "pcurv/field.hpp"

#include "pcurv/error.hpp"

namespace pcurv::fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  std::uint32_t b = a % p;
  while (e > 0) {
    if (e & 1U) r = mul(r, b, p);
    b = mul(b, b, p);
    e >>= 1U;
  }
  return r;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InternalError("fp::inv: zero is not invertible");
  // Extended Euclid on signed 64-bit values.
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace pcurv::fp
