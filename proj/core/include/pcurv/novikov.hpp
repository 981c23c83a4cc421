#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"
#include "pcurv/poly.hpp"
#include "pcurv/ratfun.hpp"

namespace pcurv {

using Exponent = std::vector<int>;

/// Exponent vectors of q in simple-coroot coordinates with height <= N,
/// ordered by (height, lex). Interned per (rank, N).
class NovikovIndex {
 public:
  static const NovikovIndex* get(int rank, int N);

  int rank() const { return rank_; }
  int order() const { return N_; }
  std::size_t size() const { return exps_.size(); }
  const Exponent& exponent(std::size_t i) const { return exps_[i]; }
  int height(std::size_t i) const { return heights_[i]; }
  /// -1 if absent (negative entry or height above N).
  int find(const Exponent& e) const;
  /// Index of exps[i] + exps[j], or -1 when truncated.
  int add(std::size_t i, std::size_t j) const { return table_[i * exps_.size() + j]; }

 private:
  NovikovIndex(int rank, int N);
  int rank_, N_;
  std::vector<Exponent> exps_;
  std::vector<int> heights_;
  std::map<Exponent, int> lookup_;
  std::vector<int> table_;
};

int exponent_height(const Exponent& e);
std::string exponent_to_string(const Exponent& e);

/// Truncated series sum_A c_A q^A with coefficients in Poly or RatFun.
template <class C>
class Series {
 public:
  Series() = default;
  explicit Series(const NovikovIndex* I) : I_(I), c_(I ? I->size() : 0) {}
  static Series constant(const NovikovIndex* I, C c) {
    Series s(I);
    s.c_[0] = std::move(c);
    return s;
  }
  static Series monomial(const NovikovIndex* I, const Exponent& e, C c) {
    Series s(I);
    int k = I->find(e);
    if (k >= 0) s.c_[k] = std::move(c);
    return s;
  }

  const NovikovIndex* index() const { return I_; }
  std::size_t size() const { return c_.size(); }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C& operator[](std::size_t i) { return c_[i]; }
  const C& at(const Exponent& e) const {
    static const C zero{};
    int k = I_->find(e);
    return k < 0 ? zero : c_[k];
  }
  bool is_zero() const {
    for (auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  Series& operator+=(const Series& o) {
    check(o);
    if (!I_) *this = Series(o.I_);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check(o);
    if (!I_) *this = Series(o.I_);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_)
      if (!x.is_zero()) x = -x;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    if (!a.I_ || !b.I_) return Series(a.I_ ? a.I_ : b.I_);
    a.check(b);
    Series r(a.I_);
    const std::size_t n = a.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.c_[j].is_zero()) continue;
        int k = a.I_->add(i, j);
        if (k < 0) continue;
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series scaled(const C& x) const {
    Series r = *this;
    for (auto& y : r.c_)
      if (!y.is_zero()) y = y * x;
    return r;
  }
  bool operator==(const Series& o) const {
    if (I_ != o.I_) {
      if (is_zero() && o.is_zero()) return true;
      return false;
    }
    return c_ == o.c_;
  }

  /// Apply f to every coefficient.
  template <class F>
  Series map(F&& f) const {
    Series r(I_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) r.c_[i] = f(c_[i]);
    return r;
  }
  /// Keep only the q^0 term.
  Series at_q0() const {
    Series r(I_);
    if (I_) r.c_[0] = c_[0];
    return r;
  }
  /// Novikov derivative: q^A -> (b, A) q^A.
  Series derivative(const std::vector<int>& b) const {
    Series r(I_);
    if (!I_) return r;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      long long s = 0;
      const auto& e = I_->exponent(i);
      for (std::size_t k = 0; k < e.size(); ++k) s += static_cast<long long>(b[k]) * e[k];
      r.c_[i] = c_[i] * scalar_like(c_[i], s);
    }
    return r;
  }
  /// Re-express at a smaller truncation order.
  Series truncate(const NovikovIndex* J) const {
    Series r(J);
    for (std::size_t i = 0; i < J->size(); ++i) {
      int k = I_->find(J->exponent(i));
      if (k >= 0) r.c_[i] = c_[k];
    }
    return r;
  }

 private:
  const NovikovIndex* I_ = nullptr;
  std::vector<C> c_;

  void check(const Series& o) const {
    if (I_ && o.I_ && I_ != o.I_) throw InternalError("Novikov truncation mismatch");
  }
  static C scalar_like(const C& x, long long s);
};

template <>
inline Poly Series<Poly>::scalar_like(const Poly& x, long long s) {
  return Poly::constant(x.ring(), s);
}
template <>
inline RatFun Series<RatFun>::scalar_like(const RatFun& x, long long s) {
  return RatFun(Poly::constant(x.ring(), s));
}

using PSeries = Series<Poly>;
using RSeries = Series<RatFun>;

/// Truncated expansion of q^a / (1 - q^a) for a positive coroot a.
PSeries geometric_expand(const PolyRing* R, const NovikovIndex* I, const Exponent& a);

/// h -> h - t in every coefficient.
Poly shift_h(const Poly& f);
PSeries shift_h(const PSeries& f);

/// Term-wise p-th power: q- and variable exponents scaled by p.
/// Only input terms of height <= N/p contribute.
PSeries frobenius(const PSeries& f);

}  // namespace pcurv
