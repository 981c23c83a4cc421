#pragma once

#include <string>
#include <vector>

#include "pcurv/gkm.hpp"
#include "pcurv/matrix.hpp"

namespace pcurv {

/// Restriction matrix of a stable basis: rows[w][v] = Stab_dir(w)|_v.
struct StabBasis {
  int direction = +1;
  std::vector<GkmClass> rows;
  std::vector<int> eps;       // polarization signs
  int nullity = 0;            // of the system actually solved
  int axiom_nullity = -1;     // of support + diagonal + h-divisibility + GKM + degree; -1 if not computed
};

/// Diagonal normalization eps * e(N_{w,-}) for the given direction; also returns eps.
Poly stab_diagonal(const Gkm& g, int w, int direction, int* eps = nullptr);

/// Demazure-Lusztig operator for a simple root on a fixed-point class:
/// (T f)_v = f_{v s_i} + hbar (f_{v s_i} - f_v) / v(alpha_i). Requires f to be GKM.
GkmClass dl_apply(const Gkm& g, int i, const GkmClass& f);
/// Same operator as a matrix on the localized fixed-point basis.
Mat<RatFun> dl_matrix(const Gkm& g, int i);

/// Nullity of the linear system given by the stated axioms with homogeneous
/// degree |R+| unknowns; returns -1 when the system is inconsistent.
int axiom_nullity(const Gkm& g, int direction, int w);

/// Solve all rows. Uniqueness is enforced through stability under the
/// Demazure-Lusztig operators; each row is re-verified against the axioms.
/// `axiom_nullity_limit` bounds |W| for the (costly) axiom-only nullity report.
StabBasis solve_stab(const Gkm& g, int direction, int axiom_nullity_limit = 12);

/// Failed axioms, one message each; empty if all hold.
std::vector<std::string> verify_axioms(const Gkm& g, const StabBasis& s);

/// Pairing matrix M[w][v] = <Stab_+(w), Stab_-(v)>.
Mat<RatFun> pairing_matrix(const Gkm& g, const StabBasis& plus, const StabBasis& minus);
/// Pairs (w, v) where the pairing differs from (-1)^{|R+|} delta.
std::vector<std::pair<int, int>> verify_duality(const Gkm& g, const StabBasis& plus, const StabBasis& minus);

/// Change between fixed-point and stable coordinates.
class StableBasisChange {
 public:
  StableBasisChange(const Gkm& g, const StabBasis& plus, const StabBasis& minus);

  /// P[v][w] = Stab_+(w)|_v
  const Mat<Poly>& P() const { return P_; }
  /// Inverse of P from the opposite basis and the pairing.
  const Mat<RatFun>& P_inv() const { return Pinv_; }

  /// P^{-1} M P; entries stay rational.
  Mat<RatFun> to_stable(const Mat<RatFun>& M) const;
  /// P M P^{-1}
  Mat<RatFun> to_fixed(const Mat<RatFun>& M) const;
  /// Like to_stable, but asserts that every entry is a polynomial.
  Mat<Poly> to_stable_poly(const Mat<RatFun>& M) const;

 private:
  Mat<Poly> P_;
  Mat<RatFun> Pr_, Pinv_;
};

Mat<RatFun> to_ratfun(const Mat<Poly>& M);
/// Throws ConventionError with `what` if an entry keeps a denominator.
Mat<Poly> to_poly(const Mat<RatFun>& M, const std::string& what);

}  // namespace pcurv
