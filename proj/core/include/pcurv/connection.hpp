#pragma once

#include <string>
#include <vector>

#include "pcurv/novikov.hpp"
#include "pcurv/stable.hpp"

namespace pcurv {

enum class WeylMode { PaperLiteral, SuCorrected };
std::string to_string(WeylMode m);
WeylMode parse_weyl_mode(const std::string& s);

/// Divisor with canonical lift w(chi), plus an optional constant shift.
struct DivisorClass {
  IVec chi;
  Poly shift;  // linear form in (l, h), or zero
};

using PMat = Mat<Poly>;
using RMat = Mat<RatFun>;
using PSMat = Mat<PSeries>;
using RSMat = Mat<RSeries>;

PSMat lift_series(const PMat& M, const NovikovIndex* I);
RSMat lift_series(const RMat& M, const NovikovIndex* I);
PSMat specialize(const PSMat& M, int var, long long c);
/// Entrywise Novikov derivative q^A -> (b, A) q^A.
template <class S>
Mat<S> derivative(const Mat<S>& M, const IVec& b) {
  return M.map([&](const S& x) { return x.derivative(b); });
}

/// Gate outcomes for a Weyl-operator family.
struct WeylGates {
  bool involution = true;
  bool braid = true;
  bool conjugation_independent = true;
  bool matches_recursion = true;  // stable-basis operator equals Stab(w) -> Stab(w s_i)
  std::vector<std::string> failures;
  bool all() const { return involution && braid && conjugation_independent && matches_recursion; }
};

/// Steinberg operators [s_beta] for each positive root, stable basis.
struct WeylAction {
  WeylMode mode;
  std::vector<PMat> simple;   // [s_i]
  std::vector<PMat> reflect;  // [s_beta], indexed like RootSystem::positive_roots
  WeylGates gates;
};

/// Permutation Stab(w) -> Stab(w x).
PMat right_permutation(const RootSystem& rs, int x, const PolyRing* R);

class ConnectionBuilder {
 public:
  ConnectionBuilder(const Gkm& g, const StableBasisChange& C);

  const Gkm& gkm() const { return g_; }
  const StableBasisChange& change() const { return C_; }

  /// diag(w(chi) + shift) in the fixed-point basis.
  PMat cup_fixed(const DivisorClass& b) const;
  PMat cup_stable(const DivisorClass& b) const;

  WeylAction weyl(WeylMode mode) const;
  /// Fixed-point-basis Steinberg operators from Demazure-Lusztig matrices.
  std::vector<RMat> weyl_fixed() const;

  /// b cup + hbar sum_beta (b, beta^vee) q^beta/(1-q^beta) ([s_beta] - 1), stable basis.
  PSMat quantum_mult(const DivisorClass& b, const WeylAction& W, const NovikovIndex* I) const;
  /// The same operator in the fixed-point basis with localized coefficients.
  RSMat quantum_mult_fixed(const DivisorClass& b, const std::vector<RMat>& W, const NovikovIndex* I) const;

 private:
  const Gkm& g_;
  const StableBasisChange& C_;
};

/// nabla_b = t d_b + sign * B.
struct ConnectionOperator {
  DivisorClass b;
  PSMat B;  // raw quantum multiplication matrix
  int sign = +1;
  PSMat effective() const { return sign > 0 ? B : -B; }
};

std::vector<PSeries> nabla_apply(const ConnectionOperator& op, const std::vector<PSeries>& v);

/// t d_a B_b - t d_b B_a + [B_a, B_b]; zero iff flat.
PSMat flatness_defect(const ConnectionOperator& a, const ConnectionOperator& b);

/// Quantum part is hbar times F_p constants; classical part is linear in (l, h).
bool integrality_check(const ConnectionOperator& op, std::string* why = nullptr);
/// B - B|_{q=0} divisible by h, and B|_{q=0} homogeneous of degree 1.
bool decomposition_check(const ConnectionOperator& op, std::string* why = nullptr);

}  // namespace pcurv
