#include "doctest.h"
#include "pcurv/pcurv.hpp"

using namespace pcurv;

namespace {

struct Run {
  RootSystem rs;
  Gkm g;
  StabBasis plus, minus;
  StableBasisChange C;
  ConnectionBuilder cb;
  WeylAction W;
  const NovikovIndex* I;
  ConnectionOperator op;
  PCurvMatrix F;
  Run(const std::string& s, std::uint32_t p, int N, IVec chi = {}, int sign = +1)
      : rs(RootSystemSpec::parse(s)),
        g(rs, p),
        plus(solve_stab(g, +1)),
        minus(solve_stab(g, -1)),
        C(g, plus, minus),
        cb(g, C),
        W(cb.weyl(WeylMode::SuCorrected)),
        I(NovikovIndex::get(rs.rank(), N)) {
    if (chi.empty()) chi.assign(rs.rank(), 1);
    op = {{chi, Poly(g.ring())}, cb.quantum_mult({chi, Poly(g.ring())}, W, I), sign};
    F = p_curvature(op, g.ring());
  }
  const PolyRing* R() const { return g.ring(); }
};

PSeries one(const NovikovIndex* I, const PolyRing* R) { return PSeries::constant(I, Poly::constant(R, 1)); }

}  // namespace

TEST_CASE("A1, p = 3: specializations, degree and commutator") {
  Run r("A1", 3, 6);
  const PolyRing* R = r.R();
  CHECK(check_q0(r.F, r.op, R));
  CHECK(check_t0(r.F, r.op, R));
  CHECK(degree_check(r.F));
  for (auto& s : r.F.F.a)
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k].degree_in(R->h()) <= 3);
  CHECK(h_expansion_checks(r.F, r.op, R).all());
  CHECK(commutator_check(r.F, r.op, R));
  CHECK(function_linearity(r.op, r.F, {{1}, {2}, {5}}, R));
}

TEST_CASE("q = 0 slice equals (b^p - t^{p-1} b) cup, by direct conjugation") {
  Run r("A2", 3, 3);
  const PolyRing* R = r.R();
  const int n = r.rs.order();
  Mat<RatFun> D(n, Basis::Fixed);
  for (auto& x : D.a) x = RatFun(Poly(R));
  const Poly t = Poly::var(R, R->t());
  for (int w = 0; w < n; ++w) {
    IVec x = r.rs.act(w, {1, 1});
    Poly xw = Poly::var(R, 0).scaled(fp::reduce(x[0], 3)) + Poly::var(R, 1).scaled(fp::reduce(x[1], 3));
    D(w, w) = RatFun(xw.pow(3) - t.pow(2) * xw);
  }
  const PMat expect = r.C.to_stable_poly(D);
  for (int i = 0; i < n * n; ++i) CHECK(r.F.F.a[i][0] == expect.a[i]);
}

TEST_CASE("t = 0 slice equals B^p") {
  Run r("A2", 5, 4);
  const PolyRing* R = r.R();
  const PSMat Bp = mat_pow(r.op.B, 5, one(r.I, R));
  CHECK(specialize(r.F.F, R->t(), 0) == specialize(Bp, R->t(), 0));
}

TEST_CASE("characteristic polynomial is invariant under h -> h - t") {
  Run r("A1", 5, 7);
  CHECK(charpoly_shift_check(charpoly(r.F.F, r.R())));
}

TEST_CASE("EV normalization constant is reproducible") {
  CHECK(derive_ev_sign() == kEvSign);
  Run r("A1", 3, 6);
  CHECK(ev_prediction_check(charpoly(r.F.F, r.R()), r.op, r.R(), kEvSign));
  CHECK_FALSE(ev_prediction_check(charpoly(r.F.F, r.R()), r.op, r.R(), -kEvSign));
}

TEST_CASE("lift shift adds (c^p - t^{p-1} c) Id") {
  Run r("A2", 3, 3);
  for (int v : {r.R()->h(), 0, 1}) CHECK(lift_shift_check(r.cb, r.op, r.W, Poly::var(r.R(), v), r.R()));
}

TEST_CASE("cross-basis computation agrees") {
  for (const char* sys : {"A1", "A2"}) {
    Run r(sys, 3, 3);
    bool poly = false;
    CHECK(cross_basis_pcurv(r.cb, r.op, r.I, r.R(), &poly) == r.F.F);
    CHECK(poly);
  }
}

TEST_CASE("orbit distinctness and discriminant") {
  Run r("A1", 3, 6, {1});
  CHECK(orbit_collisions(r.g, {1}).empty());
  CHECK_FALSE(orbit_collisions(r.g, {0}).empty());
  CHECK_FALSE(orbit_collisions(r.g, {3}).empty());
  auto d = discriminant_checks(charpoly(r.F.F, r.R()), r.op, r.g, r.R());
  CHECK(d.all());
  Run a2("A2", 3, 2);
  CHECK_FALSE(orbit_collisions(a2.g, {1, 1}).empty());
  Run a2p5("A2", 5, 2);
  CHECK(orbit_collisions(a2p5.g, {1, 1}).empty());
}

TEST_CASE("Sigma_b on the unit") {
  Run r("A1", 3, 6);
  const PolyRing* R = r.R();
  auto v = steenrod_unit(r.F, r.C, Basis::Fixed);
  const Poly l = Poly::var(R, 0), t2 = Poly::var(R, R->t(), 2);
  // q = 0: (b^p - t^{p-1} b) restricted to each fixed point
  CHECK(v[0][0] == RatFun(l.pow(3) - t2 * l));
  CHECK(v[1][0] == RatFun((-l).pow(3) + t2 * l));
  Run zero("A1", 3, 6, {0});
  for (auto& x : steenrod_unit(zero.F, zero.C, Basis::Stable)) CHECK(x.is_zero());
}

TEST_CASE("nabla sign minus is p-curvature of -B") {
  Run r("A2", 3, 3, {}, -1);
  const PolyRing* R = r.R();
  CHECK(r.F.F == p_curvature_matrix(-r.op.B, r.op.b.chi, R));
  const PSMat Bp = mat_pow(-r.op.B, 3, one(r.I, R));
  CHECK(specialize(r.F.F, R->t(), 0) == specialize(Bp, R->t(), 0));
}
