#include "doctest.h"
#include "pcurv/connection.hpp"

using namespace pcurv;

namespace {

struct Setup {
  RootSystem rs;
  Gkm g;
  StabBasis plus, minus;
  StableBasisChange C;
  ConnectionBuilder cb;
  Setup(const std::string& s, std::uint32_t p)
      : rs(RootSystemSpec::parse(s)),
        g(rs, p),
        plus(solve_stab(g, +1)),
        minus(solve_stab(g, -1)),
        C(g, plus, minus),
        cb(g, C) {}
  ConnectionOperator op(const IVec& chi, WeylMode mode, int N) const {
    DivisorClass b{chi, Poly(g.ring())};
    return {b, cb.quantum_mult(b, cb.weyl(mode), NovikovIndex::get(rs.rank(), N)), +1};
  }
};

}  // namespace

TEST_CASE("A1 cup product in the stable basis by explicit inversion") {
  Setup s("A1", 3);
  const PolyRing* R = s.g.ring();
  const Poly l = Poly::var(R, 0), h = Poly::var(R, R->h());
  // P[v][w] = Stab(w)|_v = [[2l, h], [0, h + l]]; det = 2l(h + l)
  const Poly a = l.scaled(2), b = h, d = h + l;
  const LinearForm fl = LinearForm::make(R, {1, 0}), fd = LinearForm::make(R, {1, 1});
  const RatFun inv_det = RatFun(Poly::constant(R, 2), {fl, fd});  // 1 / (2 l (h + l)) = 2 / (l (h + l)) mod 3
  Mat<RatFun> Pinv(2);
  Pinv(0, 0) = RatFun(d) * inv_det;
  Pinv(0, 1) = RatFun(-b) * inv_det;
  Pinv(1, 0) = RatFun(Poly(R));
  Pinv(1, 1) = RatFun(a) * inv_det;
  Mat<RatFun> D(2), P(2);
  D(0, 0) = RatFun(l), D(1, 1) = RatFun(-l), D(0, 1) = D(1, 0) = RatFun(Poly(R));
  P(0, 0) = RatFun(a), P(0, 1) = RatFun(b), P(1, 0) = RatFun(Poly(R)), P(1, 1) = RatFun(d);
  const Mat<RatFun> expect = Pinv * D * P;
  const PMat got = s.cb.cup_stable({{1}, Poly(R)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(expect(i, j).is_polynomial());
      CHECK(expect(i, j).num() == got(i, j));
    }
}

TEST_CASE("A1, N = 2: quantum part is h (q + q^2) ([s] - 1)") {
  Setup s("A1", 3);
  const PolyRing* R = s.g.ring();
  const NovikovIndex* I = NovikovIndex::get(1, 2);
  ConnectionOperator op = s.op({1}, WeylMode::SuCorrected, 2);
  const PSMat cup = lift_series(s.cb.cup_stable({{1}, Poly(R)}), I);
  const PMat sw = right_permutation(s.rs, s.rs.simple_reflection(0), R);
  PSeries hq = PSeries::monomial(I, {1}, Poly::var(R, R->h())) + PSeries::monomial(I, {2}, Poly::var(R, R->h()));
  const PSMat expect = cup + lift_series(sw - PMat::identity(2, Poly::constant(R, 1)), I).scaled(hq);
  CHECK(op.B == expect);
}

TEST_CASE("A1 paper-literal reflection is -1 - R") {
  Setup s("A1", 3);
  const PolyRing* R = s.g.ring();
  const WeylAction W = s.cb.weyl(WeylMode::PaperLiteral);
  for (auto& x : W.simple[0].a) CHECK(x == Poly::constant(R, -1));
  CHECK(integrality_check(s.op({1}, WeylMode::PaperLiteral, 4)));
}

TEST_CASE("corrected Weyl operators pass the gates; literal ones do not at rank 2") {
  for (const char* sys : {"A2", "B2", "C2", "G2"}) {
    CAPTURE(sys);
    Setup s(sys, 5);
    CHECK(s.cb.weyl(WeylMode::SuCorrected).gates.all());
    CHECK_FALSE(s.cb.weyl(WeylMode::PaperLiteral).gates.all());
  }
}

TEST_CASE("fixed-point Steinberg operators are involutions") {
  Setup s("A2", 5);
  const auto W = s.cb.weyl_fixed();
  const RatFun one(Poly::constant(s.g.ring(), 1));
  for (auto& M : W) CHECK(M * M == RMat::identity(M.n, one, M.basis));
}

TEST_CASE("flatness for pairs of fundamental divisors") {
  for (const char* sys : {"A2", "B2", "C2"}) {
    CAPTURE(sys);
    Setup s(sys, 5);
    auto a = s.op({1, 0}, WeylMode::SuCorrected, 4), b = s.op({0, 1}, WeylMode::SuCorrected, 4);
    CHECK(flatness_defect(a, b).is_zero());
    CHECK(integrality_check(a));
    CHECK(decomposition_check(b));
  }
  Setup s("A2", 5);
  auto a = s.op({1, 0}, WeylMode::PaperLiteral, 4), b = s.op({0, 1}, WeylMode::PaperLiteral, 4);
  CHECK_FALSE(flatness_defect(a, b).is_zero());
}

TEST_CASE("connection is linear in the divisor") {
  Setup s("B2", 5);
  auto a = s.op({1, 0}, WeylMode::SuCorrected, 3), b = s.op({0, 1}, WeylMode::SuCorrected, 3),
       ab = s.op({1, 1}, WeylMode::SuCorrected, 3);
  CHECK(a.B + b.B == ab.B);
}
