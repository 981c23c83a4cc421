#include "pcurv/gkm.hpp"

#include <string>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

void check_prime(const RootSystem& rs, std::uint32_t p) {
  if (!fp::is_prime(p)) throw ConfigError("prime " + std::to_string(p) + " is not prime");
  if (p <= 2) throw ConfigError("prime must exceed 2");
  const auto& A = rs.cartan();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (i != j && A[i][j] != 0 && A[i][j] % static_cast<int>(p) == 0)
        throw DegeneracyError("p = " + std::to_string(p) + " divides the Cartan entry A[" +
                              std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] of " +
                              rs.spec().name());
  const PolyRing* R = PolyRing::get(p, rs.rank());
  for (auto& b : rs.positive_roots()) {
    std::vector<long long> c(b.weight.begin(), b.weight.end());
    c.push_back(0);
    try {
      (void)LinearForm::make(R, c);
    } catch (const DegeneracyError&) {
      throw DegeneracyError("a positive root of " + rs.spec().name() + " vanishes mod " + std::to_string(p));
    }
  }
}

Gkm::Gkm(const RootSystem& rs, std::uint32_t p, int h_sign)
    : rs_(rs), R_(PolyRing::get(p, rs.rank())), hs_(h_sign >= 0 ? 1 : -1) {
  const int n = rs.order();
  tangent_.resize(n);
  for (int w = 0; w < n; ++w) {
    auto& td = tangent_[w];
    Poly ef = Poly::constant(R_, 1), e = Poly::constant(R_, 1);
    for (auto& b : rs.positive_roots()) {
      IVec x = rs.act(w, b.weight);
      IVec neg(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) neg[k] = -x[k];
      td.base.push_back({neg, 0});
      td.fiber.push_back({x, hs_});
      ef = ef * to_poly(td.base.back()) * to_poly(td.fiber.back());
      e = e * to_poly({x, 0});
    }
    efull_.push_back(ef);
    ew_.push_back(e);
  }
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < rs.num_positive(); ++k) {
      int b = rs.mul(a, rs.reflection(k));
      if (a < b) edges_.push_back({a, b, k, {rs.act(a, rs.positive_roots()[k].weight), 0}});
    }
}

Poly Gkm::to_poly(const TWeight& x) const {
  std::vector<Poly::Term> t;
  for (int i = 0; i < R_->rank(); ++i)
    if (x.chi[i]) t.push_back({mono::var(i), fp::reduce(x.chi[i], R_->p())});
  if (x.h) t.push_back({mono::var(R_->h()), fp::reduce(x.h, R_->p())});
  return Poly::from_terms(R_, std::move(t));
}

LinearForm Gkm::to_form(const TWeight& x, std::uint32_t* scale) const {
  std::vector<long long> c(x.chi.begin(), x.chi.end());
  c.push_back(x.h);
  return LinearForm::make(R_, c, scale);
}

std::pair<std::vector<TWeight>, std::vector<TWeight>> Gkm::normal_split(int w, int sign) const {
  std::vector<TWeight> minus, plus;
  auto place = [&](const TWeight& x) {
    const int s = sign * rs_.pair_rho(x.chi);
    if (s == 0) throw DegeneracyError("cocharacter is not generic");
    (s < 0 ? minus : plus).push_back(x);
  };
  for (auto& x : tangent_[w].base) place(x);
  for (auto& x : tangent_[w].fiber) place(x);
  return {minus, plus};
}

GkmClass Gkm::divisor_class(const IVec& chi) const {
  GkmClass c;
  for (int w = 0; w < rs_.order(); ++w) c.push_back(to_poly({rs_.act(w, chi), 0}));
  return c;
}

bool Gkm::gkm_check(const GkmClass& c) const {
  for (auto& e : edges_) {
    Poly d = c[e.a] - c[e.b];
    if (d.is_zero()) continue;
    Poly q;
    if (!d.divide_linear(to_form(e.label), q)) return false;
  }
  return true;
}

RatFun Gkm::loc_pairing(const GkmClass& x, const GkmClass& y) const {
  RatFun s;
  for (int w = 0; w < rs_.order(); ++w) {
    Poly num = x[w] * y[w];
    if (num.is_zero()) continue;
    std::vector<LinearForm> den;
    for (auto* group : {&tangent_[w].base, &tangent_[w].fiber})
      for (auto& t : *group) {
        std::uint32_t sc = 1;
        den.push_back(to_form(t, &sc));
        num = num.scaled(fp::inv(sc, R_->p()));
      }
    s += RatFun(num, den);
  }
  return s;
}

}  // namespace pcurv
