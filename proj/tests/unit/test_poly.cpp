#include <random>

#include "doctest.h"
#include "pcurv/error.hpp"
#include "support.hpp"

using namespace pcurv;
using testing::random_poly;

TEST_CASE("multiplication matches a dense oracle") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {3u, 5u, 65521u}) {
    const PolyRing* R = PolyRing::get(p, 2);
    for (int trial = 0; trial < 30; ++trial) {
      Poly a = random_poly(R, rng, 6, 4), b = random_poly(R, rng, 6, 4);
      CHECK(testing::dense(a * b) == testing::dense_mul(testing::dense(a), testing::dense(b), p));
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2);
  const PolyRing* R = PolyRing::get(5, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Poly a = random_poly(R, rng, 5, 3), b = random_poly(R, rng, 5, 3), c = random_poly(R, rng, 5, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == Poly(R));
    CHECK(a * Poly::constant(R, 1) == a);
  }
}

TEST_CASE("Frobenius is the p-th power map and a ring homomorphism") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {3u, 5u}) {
    const PolyRing* R = PolyRing::get(p, 2);
    for (int trial = 0; trial < 20; ++trial) {
      Poly a = random_poly(R, rng, 4, 3), b = random_poly(R, rng, 4, 3);
      CHECK(a.frobenius() == a.pow(p));
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }
}

TEST_CASE("substitution commutes with evaluation") {
  std::mt19937_64 rng(4);
  const PolyRing* R = PolyRing::get(7, 2);
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(R, rng, 6, 4), g = random_poly(R, rng, 3, 2);
    std::vector<long long> x = {static_cast<long long>(rng() % 7), static_cast<long long>(rng() % 7),
                                static_cast<long long>(rng() % 7), static_cast<long long>(rng() % 7)};
    std::vector<long long> y = x;
    y[R->h()] = testing::eval(g, x);
    CHECK(testing::eval(f.substitute(R->h(), g), x) == testing::eval(f, y));
  }
}

TEST_CASE("coeff_in reassembles the polynomial") {
  std::mt19937_64 rng(5);
  const PolyRing* R = PolyRing::get(3, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = random_poly(R, rng, 8, 5);
    Poly back(R);
    for (int k = 0; k <= f.degree_in(R->t()); ++k) back += f.coeff_in(R->t(), k) * Poly::var(R, R->t(), k);
    CHECK(back == f);
  }
}

TEST_CASE("exact division by linear forms") {
  std::mt19937_64 rng(6);
  const PolyRing* R = PolyRing::get(5, 2);
  const LinearForm l = LinearForm::make(R, {2, 1, 3});
  for (int trial = 0; trial < 20; ++trial) {
    Poly g = random_poly(R, rng, 5, 3);
    Poly q;
    REQUIRE((l.to_poly() * g).divide_linear(l, q));
    CHECK(q == g);
  }
  Poly q;
  CHECK_FALSE((l.to_poly() + Poly::constant(R, 1)).divide_linear(l, q));
}

TEST_CASE("linear forms are normalized at the highest variable") {
  const PolyRing* R = PolyRing::get(5, 2);
  std::uint32_t s = 0;
  const LinearForm l = LinearForm::make(R, {1, 0, 2}, &s);
  CHECK(s == 2);
  CHECK(l.coeffs() == std::vector<std::uint32_t>{3, 0, 1});
  CHECK_THROWS_AS(LinearForm::make(R, {5, 10, 0}), DegeneracyError);
}

TEST_CASE("printing is graded, then t > h > l") {
  const PolyRing* R = PolyRing::get(5, 2);
  Poly f = Poly::var(R, R->h(), 2) * Poly::var(R, 0).scaled(2) + Poly::constant(R, 3) + Poly::var(R, R->t());
  CHECK(f.to_string() == "2*h^2*l1 + t + 3");
  CHECK(Poly(R).to_string() == "0");
}

TEST_CASE("degree bookkeeping") {
  const PolyRing* R = PolyRing::get(3, 2);
  Poly f = Poly::var(R, 0, 2) * Poly::var(R, R->h()) + Poly::var(R, 1);
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in(0) == 2);
  CHECK_FALSE(f.is_homogeneous(3));
  CHECK((f - Poly::var(R, 1)).is_homogeneous(3));
}
