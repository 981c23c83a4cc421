#include "pcurv/ratfun.hpp"

#include <algorithm>

namespace pcurv {

RatFun::RatFun(Poly num, std::vector<LinearForm> den) : num_(std::move(num)), den_(std::move(den)) {
  std::sort(den_.begin(), den_.end());
  reduce();
}

RatFun ratfun_reduce(const Poly& num, std::vector<LinearForm> den) { return RatFun(num, std::move(den)); }

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<LinearForm> kept;
  kept.reserve(den_.size());
  for (std::size_t i = 0; i < den_.size();) {
    std::size_t j = i;
    while (j < den_.size() && den_[j] == den_[i]) ++j;
    std::size_t left = j - i;
    Poly q;
    while (left > 0 && num_.divide_linear(den_[i], q)) {
      num_ = std::move(q);
      --left;
    }
    kept.insert(kept.end(), left, den_[i]);
    i = j;
  }
  den_.swap(kept);
}

namespace {

// a \ b as multisets of sorted vectors.
std::vector<LinearForm> difference(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b) {
  std::vector<LinearForm> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poly product(const PolyRing* R, const std::vector<LinearForm>& f) {
  Poly r = Poly::constant(R, 1);
  for (auto& l : f) r = r * l.to_poly();
  return r;
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  std::vector<LinearForm> l;
  std::set_union(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(l));
  const PolyRing* R = a.ring();
  Poly n = a.num_ * product(R, difference(l, a.den_)) + b.num_ * product(R, difference(l, b.den_));
  return RatFun(std::move(n), std::move(l));
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_.empty() && b.den_.empty()) return RatFun(a.num_ * b.num_, {}, true);
  std::vector<LinearForm> d;
  std::merge(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(d));
  RatFun r(a.num_ * b.num_, std::move(d), true);
  r.reduce();
  return r;
}

std::string RatFun::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) s += (i ? ")*(" : "") + den_[i].to_string();
  return s + ")";
}

}  // namespace pcurv
