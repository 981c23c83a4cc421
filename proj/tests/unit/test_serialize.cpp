#include <random>

#include "doctest.h"
#include "pcurv/error.hpp"
#include "pcurv/serialize.hpp"
#include "support.hpp"

using namespace pcurv;

TEST_CASE("canonical series example") {
  const PolyRing* R = PolyRing::get(5, 2);
  const NovikovIndex* I = NovikovIndex::get(2, 2);
  PSeries s = PSeries::monomial(I, {1, 0}, Poly::var(R, R->h(), 2) * Poly::var(R, 0)) +
              PSeries::constant(I, Poly::constant(R, 3));
  CHECK(to_text(s) == "q[1,0]*h^2*l1 + 3");
  CHECK(parse_pseries("q[1,0]*h^2*l1 + 3", R, I) == s);
  CHECK(parse_pseries("3 + l1*h*h*q[1,0] - 5*t", R, I) == s);
}

TEST_CASE("polynomials round-trip") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {3u, 5u, 7919u}) {
    const PolyRing* R = PolyRing::get(p, 3);
    for (int trial = 0; trial < 40; ++trial) {
      Poly f = testing::random_poly(R, rng, 6, 5);
      CHECK(parse_poly(to_text(f), R) == f);
      CHECK(to_text(parse_poly(to_text(f), R)) == to_text(f));
    }
  }
}

TEST_CASE("rational functions and rational series round-trip") {
  std::mt19937_64 rng(32);
  const PolyRing* R = PolyRing::get(5, 2);
  const NovikovIndex* I = NovikovIndex::get(2, 3);
  const LinearForm a = LinearForm::make(R, {1, 0, 1}), b = LinearForm::make(R, {2, 1, 0});
  for (int trial = 0; trial < 20; ++trial) {
    RatFun x(testing::random_poly(R, rng, 4, 3), {a, b, b});
    CHECK(parse_ratfun(to_text(x), R) == x);
    RSeries s(I);
    for (std::size_t k = 0; k < I->size(); ++k)
      if (rng() % 2) s[k] = RatFun(testing::random_poly(R, rng, 3, 2), rng() % 2 ? std::vector<LinearForm>{a}
                                                                                 : std::vector<LinearForm>{});
    CHECK(parse_rseries(to_text(s), R, I) == s);
  }
}

TEST_CASE("matrices round-trip") {
  std::mt19937_64 rng(33);
  const PolyRing* R = PolyRing::get(3, 1);
  const NovikovIndex* I = NovikovIndex::get(1, 4);
  PSMat M(3);
  for (auto& x : M.a) {
    x = PSeries(I);
    for (std::size_t k = 0; k < I->size(); ++k)
      if (rng() % 2) x[k] = testing::random_poly(R, rng, 3, 3);
  }
  CHECK(parse_psmat(to_text(M), R, I) == M);
  PMat P(2);
  P(0, 0) = Poly::var(R, 0).scaled(2), P(0, 1) = Poly(R), P(1, 0) = Poly::var(R, R->h());
  P(1, 1) = Poly::var(R, R->h()) + Poly::var(R, 0);
  CHECK(to_text(P) == "2*l1 ; 0\nh ; h + l1\n");
  CHECK(parse_pmat("# comment\n" + to_text(P), R) == P);
}

TEST_CASE("malformed input is rejected") {
  const PolyRing* R = PolyRing::get(3, 1);
  for (const char* s : {"", "l2", "h^", "(h", "x", "h + + l1", "(h)/(t)", "q[1]"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_poly(s, R), ConfigError);
  }
}
