#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcurv/connection.hpp"

namespace pcurv {

namespace detail {
inline const PolyRing* ring_of(const PSMat& M) {
  for (auto& s : M.a)
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k].ring()) return s[k].ring();
  return nullptr;
}
inline const PolyRing* ring_of(const RSMat& M) {
  for (auto& s : M.a)
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k].ring()) return s[k].ring();
  return nullptr;
}
inline Poly make_coef(const Poly&, const Poly& x) { return x; }
inline RatFun make_coef(const RatFun&, const Poly& x) { return RatFun(x); }
}  // namespace detail

/// F = nabla^p - t^{p-1} nabla applied to a matrix of sections X (columns),
/// with nabla = t d_b + B.
template <class C>
Mat<Series<C>> pcurv_apply(const Mat<Series<C>>& B, const IVec& b, const Mat<Series<C>>& X,
                           const PolyRing* R) {
  const NovikovIndex* I = X.a[0].index() ? X.a[0].index() : B.a[0].index();
  const auto t = Series<C>::constant(I, detail::make_coef(C{}, Poly::var(R, R->t())));
  const auto tp = Series<C>::constant(I, detail::make_coef(C{}, Poly::var(R, R->t(), R->p() - 1)));
  auto step = [&](const Mat<Series<C>>& V) { return derivative(V, b).scaled(t) + B * V; };
  Mat<Series<C>> V = step(X);
  const Mat<Series<C>> V1 = V;
  for (std::uint32_t k = 1; k < R->p(); ++k) V = step(V);
  return V - V1.scaled(tp);
}

/// p-curvature on constant sections (the identity matrix of sections).
template <class C>
Mat<Series<C>> p_curvature_matrix(const Mat<Series<C>>& B, const IVec& b, const PolyRing* R) {
  const NovikovIndex* I = B.a[0].index();
  const auto one = Series<C>::constant(I, detail::make_coef(C{}, Poly::constant(R, 1)));
  return pcurv_apply(B, b, Mat<Series<C>>::identity(B.n, one, B.basis), R);
}

struct PCurvMatrix {
  PSMat F;
  int p = 0;
  int N = 0;
  IVec b;
  /// Coefficient of h^{p-k} in F.
  PSMat h_component(int k) const;
};

PCurvMatrix p_curvature(const ConnectionOperator& op, const PolyRing* R);

/// F(q^A X) == q^A F(X) for the given exponents; returns the first failing A.
bool function_linearity(const ConnectionOperator& op, const PCurvMatrix& F, const std::vector<Exponent>& samples,
                        const PolyRing* R, std::string* why = nullptr);

bool degree_check(const PCurvMatrix& F, std::string* why = nullptr);
bool check_t0(const PCurvMatrix& F, const ConnectionOperator& op, const PolyRing* R);
bool check_q0(const PCurvMatrix& F, const ConnectionOperator& op, const PolyRing* R);
struct HExpansionResult {
  bool degree_ok = true, top_ok = true, bottom_ok = true;
  bool all() const { return degree_ok && top_ok && bottom_ok; }
};
HExpansionResult h_expansion_checks(const PCurvMatrix& F, const ConnectionOperator& op, const PolyRing* R);
/// F B - B F == t d_b F.
bool commutator_check(const PCurvMatrix& F, const ConnectionOperator& op, const PolyRing* R);

using SeriesCharPoly = CharPoly<PSeries>;
SeriesCharPoly charpoly(const PSMat& M, const PolyRing* R);
bool charpoly_shift_check(const SeriesCharPoly& chi);

/// Sign s in c = s (t^{p-1} h - h^p); derived once by brute force at A1, p = 3.
constexpr int kEvSign = -1;
/// Recompute the sign from A1 at p = 3: returns +1, -1, or 0 if neither matches.
int derive_ev_sign();
/// chi(F)|_{l=0} against c^k Frob(coefficient of chi_{B/h}|_{l=0}).
bool ev_prediction_check(const SeriesCharPoly& chiF, const ConnectionOperator& op, const PolyRing* R, int sign,
                         std::string* why = nullptr);

/// F_{b, lift + c} - F_{b, lift} == (c'^p - t^{p-1} c') Id with c' = sign * c.
bool lift_shift_check(const ConnectionBuilder& cb, const ConnectionOperator& op, const WeylAction& W,
                      const Poly& c, const PolyRing* R);

struct DiscriminantResult {
  bool distinct = true;        // Weyl-orbit restrictions pairwise distinct mod p
  bool t0_matches = true;      // chi(F)|_{t=0} == chi(B^p)
  bool q0t0_formula = true;    // disc at q=0,t=0 == prod (x_i^p - x_j^p)^2, nonzero
  std::vector<std::pair<int, int>> collisions;
  bool all() const { return distinct && t0_matches && q0t0_formula; }
};
DiscriminantResult discriminant_checks(const SeriesCharPoly& chiF, const ConnectionOperator& op,
                                       const Gkm& g, const PolyRing* R, bool full = true);
/// Weyl-orbit collisions of {w(chi) + shift} mod p.
std::vector<std::pair<int, int>> orbit_collisions(const Gkm& g, const IVec& chi);

/// F in the fixed-point basis with localized coefficients, moved to the stable basis.
PSMat cross_basis_pcurv(const ConnectionBuilder& cb, const ConnectionOperator& op, const NovikovIndex* I,
                        const PolyRing* R, bool* polynomial);

/// Sigma_b(b0) = F(b0); the unit is converted from fixed-point to stable coordinates.
std::vector<RSeries> steenrod_unit(const PCurvMatrix& F, const StableBasisChange& C, Basis out);

}  // namespace pcurv
