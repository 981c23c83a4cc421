#include "pcurv/novikov.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

namespace pcurv {

int exponent_height(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string exponent_to_string(const Exponent& e) {
  std::string s = "q[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

const NovikovIndex* NovikovIndex::get(int rank, int N) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<NovikovIndex>> registry;
  if (N < 0) throw ConfigError("truncation order must be non-negative");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{rank, N}];
  if (!slot) slot.reset(new NovikovIndex(rank, N));
  return slot.get();
}

NovikovIndex::NovikovIndex(int rank, int N) : rank_(rank), N_(N) {
  Exponent e(rank, 0);
  // Enumerate all vectors with sum <= N.
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == rank) {
      exps_.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[k] = v;
      rec(k + 1, left - v);
    }
    e[k] = 0;
  };
  rec(0, N);
  std::sort(exps_.begin(), exps_.end(), [](const Exponent& a, const Exponent& b) {
    int ha = exponent_height(a), hb = exponent_height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    lookup_[exps_[i]] = static_cast<int>(i);
    heights_.push_back(exponent_height(exps_[i]));
  }
  const std::size_t n = exps_.size();
  table_.assign(n * n, -1);
  Exponent s(rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (heights_[i] + heights_[j] > N) continue;
      for (int k = 0; k < rank; ++k) s[k] = exps_[i][k] + exps_[j][k];
      table_[i * n + j] = lookup_.at(s);
    }
}

int NovikovIndex::find(const Exponent& e) const {
  auto it = lookup_.find(e);
  return it == lookup_.end() ? -1 : it->second;
}

PSeries geometric_expand(const PolyRing* R, const NovikovIndex* I, const Exponent& a) {
  const int ha = exponent_height(a);
  for (int x : a)
    if (x < 0) throw InternalError("geometric_expand needs a positive coroot");
  if (ha <= 0) throw InternalError("geometric_expand needs a positive coroot");
  PSeries s(I);
  Exponent e(a.size());
  for (int k = 1; k * ha <= I->order(); ++k) {
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = k * a[i];
    s[I->find(e)] = Poly::constant(R, 1);
  }
  return s;
}

Poly shift_h(const Poly& f) {
  if (!f.ring()) return f;
  const PolyRing* R = f.ring();
  return f.substitute(R->h(), Poly::var(R, R->h()) - Poly::var(R, R->t()));
}

PSeries shift_h(const PSeries& f) {
  return f.map([](const Poly& x) { return shift_h(x); });
}

PSeries frobenius(const PSeries& f) {
  const NovikovIndex* I = f.index();
  PSeries r(I);
  if (!I) return r;
  const int p = [&] {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i].ring()) return static_cast<int>(f[i].ring()->p());
    return 0;
  }();
  if (p == 0) return r;
  Exponent e(I->rank());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (static_cast<long long>(I->height(i)) * p > I->order()) continue;
    for (int k = 0; k < I->rank(); ++k) e[k] = I->exponent(i)[k] * p;
    r[I->find(e)] = f[i].frobenius();
  }
  return r;
}

}  // namespace pcurv
