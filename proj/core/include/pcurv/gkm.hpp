#pragma once

#include <vector>

#include "pcurv/poly.hpp"
#include "pcurv/ratfun.hpp"
#include "pcurv/rootdata.hpp"

namespace pcurv {

/// Integer weight of T x C*: lambda-part in fundamental-weight coordinates plus an h coefficient.
struct TWeight {
  IVec chi;
  int h = 0;
  bool operator==(const TWeight&) const = default;
};

struct TangentData {
  std::vector<TWeight> base;   // w(alpha), alpha in R^-
  std::vector<TWeight> fiber;  // s*h - w(alpha)
};

struct Edge {
  int a, b;      // b = a s_beta
  int root;      // index of beta
  TWeight label; // a(beta)
};

using GkmClass = std::vector<Poly>;

/// Fixed-point model of equivariant cohomology of T*(G/B) over F_p.
class Gkm {
 public:
  /// h_sign = +1 gives fiber weights h - w(alpha); -1 flips h globally.
  Gkm(const RootSystem& rs, std::uint32_t p, int h_sign = 1);

  const RootSystem& roots() const { return rs_; }
  const PolyRing* ring() const { return R_; }
  int h_sign() const { return hs_; }
  /// The polynomial h_sign * h.
  Poly hbar() const { return Poly::var(R_, R_->h()).scaled(hs_ > 0 ? 1 : R_->p() - 1); }

  const TangentData& tangent(int w) const { return tangent_[w]; }
  const Poly& euler_full(int w) const { return efull_[w]; }
  const Poly& euler_base(int w) const { return ew_[w]; }
  /// Tangent weights split by the sign of their T-part against sign * 2rho-vee.
  /// Returns N_- first.
  std::pair<std::vector<TWeight>, std::vector<TWeight>> normal_split(int w, int sign) const;
  const std::vector<Edge>& edges() const { return edges_; }

  Poly to_poly(const TWeight& x) const;
  LinearForm to_form(const TWeight& x, std::uint32_t* scale = nullptr) const;
  /// Restrictions w(chi) of the canonical lift of a weight.
  GkmClass divisor_class(const IVec& chi) const;

  bool gkm_check(const GkmClass& c) const;
  /// sum_w x_w y_w / e_full(w)
  RatFun loc_pairing(const GkmClass& x, const GkmClass& y) const;

 private:
  const RootSystem& rs_;
  const PolyRing* R_;
  int hs_;
  std::vector<TangentData> tangent_;
  std::vector<Poly> efull_, ew_;
  std::vector<Edge> edges_;
};

/// Admissibility of p for a root system: p > 2, p prime, p does not divide an
/// off-diagonal Cartan entry, and no positive root vanishes mod p.
/// Throws DegeneracyError or ConfigError.
void check_prime(const RootSystem& rs, std::uint32_t p);

}  // namespace pcurv
