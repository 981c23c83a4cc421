#pragma once

#include <string>
#include <vector>

#include "pcurv/poly.hpp"

namespace pcurv {

/// numerator / (product of linear forms). Kept reduced: no denominator factor
/// divides the numerator, and zero has an empty denominator.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(Poly num) : num_(std::move(num)) {}
  RatFun(Poly num, std::vector<LinearForm> den);

  static RatFun inverse_of(const LinearForm& l) { return RatFun(Poly::constant(l.ring(), 1), {l}); }

  const Poly& num() const { return num_; }
  const std::vector<LinearForm>& den() const { return den_; }
  const PolyRing* ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RatFun operator-() const { return RatFun(-num_, den_, true); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const;

 private:
  RatFun(Poly num, std::vector<LinearForm> den, bool /*already reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  std::vector<LinearForm> den_;  // sorted, with multiplicity
};

/// Cancel every denominator factor dividing the numerator.
RatFun ratfun_reduce(const Poly& num, std::vector<LinearForm> den);

}  // namespace pcurv
