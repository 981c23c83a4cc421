#pragma once

#include <map>
#include <random>
#include <vector>

#include "pcurv/poly.hpp"

namespace testing {

using pcurv::Poly;
using pcurv::PolyRing;

/// Random polynomial with at most `terms` terms of total degree <= deg,
/// never involving t unless `with_t`.
inline Poly random_poly(const PolyRing* R, std::mt19937_64& rng, int terms, int deg, bool with_t = true) {
  std::vector<Poly::Term> t;
  const int nv = R->nvars() - (with_t ? 0 : 1);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(R->nvars(), 0);
    int d = static_cast<int>(rng() % (deg + 1));
    while (d-- > 0) ++e[rng() % nv];
    t.push_back({pcurv::mono::make(e), static_cast<std::uint32_t>(rng() % R->p())});
  }
  return Poly::from_terms(R, t);
}

/// Dense oracle: exponent vector -> coefficient in Z/p.
using Dense = std::map<std::vector<int>, long long>;

inline Dense dense(const Poly& f) {
  Dense d;
  if (!f.ring()) return d;
  for (auto& t : f.terms()) {
    std::vector<int> e(f.ring()->nvars());
    for (int i = 0; i < f.ring()->nvars(); ++i) e[i] = pcurv::mono::exp(t.m, i);
    d[e] = t.c;
  }
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b, long long p) {
  Dense r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] = (r[e] + ca * cb) % p;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

/// Evaluate at integer point mod p.
inline long long eval(const Poly& f, const std::vector<long long>& x) {
  if (!f.ring()) return 0;
  const long long p = f.ring()->p();
  long long s = 0;
  for (auto& t : f.terms()) {
    long long v = t.c;
    for (int i = 0; i < f.ring()->nvars(); ++i)
      for (int k = 0; k < pcurv::mono::exp(t.m, i); ++k) v = v * (x[i] % p) % p;
    s = (s + v) % p;
  }
  return s;
}

}  // namespace testing
