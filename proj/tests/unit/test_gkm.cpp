#include "doctest.h"
#include "pcurv/error.hpp"
#include "pcurv/field.hpp"
#include "pcurv/gkm.hpp"

using namespace pcurv;

TEST_CASE("A1 tangent weights") {
  RootSystem rs(RootSystemSpec::parse("A1"));
  Gkm g(rs, 5);
  const PolyRing* R = g.ring();
  const Poly l = Poly::var(R, 0), h = Poly::var(R, R->h());
  // alpha = 2 varpi; at e the base direction has weight -alpha, the fiber h + alpha
  CHECK(g.euler_full(0) == (l.scaled(5 - 2)) * (h + l.scaled(2)));
  CHECK(g.euler_full(1) == l.scaled(2) * (h + l.scaled(5 - 2)));
  CHECK(g.edges().size() == 1);
}

TEST_CASE("Euler classes agree with a direct product over roots") {
  for (const char* s : {"A2", "B2", "G2"}) {
    RootSystem rs(RootSystemSpec::parse(s));
    Gkm g(rs, 7);
    const PolyRing* R = g.ring();
    for (int w = 0; w < rs.order(); ++w) {
      Poly e = Poly::constant(R, 1);
      for (auto& b : rs.positive_roots()) {
        IVec x = rs.act(w, b.weight);
        Poly xw(R);
        for (int i = 0; i < rs.rank(); ++i) xw += Poly::var(R, i).scaled(fp::reduce(x[i], 7));
        e = e * (-xw) * (Poly::var(R, R->h()) + xw);
      }
      CHECK(g.euler_full(w) == e);
    }
    CHECK(static_cast<int>(g.edges().size()) == rs.order() * rs.num_positive() / 2);
  }
}

TEST_CASE("divisor classes satisfy GKM; point classes away from the top do not") {
  RootSystem rs(RootSystemSpec::parse("A2"));
  Gkm g(rs, 5);
  CHECK(g.gkm_check(g.divisor_class({1, 0})));
  CHECK(g.gkm_check(g.divisor_class({1, 1})));
  GkmClass delta(rs.order(), Poly(g.ring()));
  delta[0] = Poly::constant(g.ring(), 1);
  CHECK_FALSE(g.gkm_check(delta));
}

TEST_CASE("normal splitting partitions the tangent weights") {
  RootSystem rs(RootSystemSpec::parse("B2"));
  Gkm g(rs, 5);
  for (int w = 0; w < rs.order(); ++w)
    for (int sign : {+1, -1}) {
      auto [neg, pos] = g.normal_split(w, sign);
      CHECK(neg.size() + pos.size() == 2 * static_cast<std::size_t>(rs.num_positive()));
      CHECK(neg.size() == pos.size());
    }
}

TEST_CASE("prime admissibility") {
  CHECK_THROWS_AS(check_prime(RootSystem(RootSystemSpec::parse("G2")), 3), DegeneracyError);
  CHECK_NOTHROW(check_prime(RootSystem(RootSystemSpec::parse("G2")), 5));
  CHECK_NOTHROW(check_prime(RootSystem(RootSystemSpec::parse("A2")), 3));
  CHECK_THROWS_AS(check_prime(RootSystem(RootSystemSpec::parse("A1")), 2), ConfigError);
  CHECK_THROWS_AS(check_prime(RootSystem(RootSystemSpec::parse("A1")), 9), ConfigError);
}
