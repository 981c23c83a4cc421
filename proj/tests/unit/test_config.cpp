#include "doctest.h"
#include "pcurv/config.hpp"
#include "pcurv/error.hpp"

using namespace pcurv;

TEST_CASE("unknown keys are rejected") {
  RunConfig c;
  CHECK_THROWS_AS(c.set("foo", "1"), ConfigError);
  CHECK_THROWS_AS(c.load_text("system = A2\nprime = 3\nfoo = 1\n"), ConfigError);
}

TEST_CASE("prime must be an odd prime") {
  RunConfig c;
  for (const char* p : {"2", "4", "1", "0", "-3", "9", "x", "3.0"}) {
    CAPTURE(p);
    CHECK_THROWS_AS(c.set("prime", p), ConfigError);
  }
  c.set("p", "7");
  CHECK(c.prime == 7);
}

TEST_CASE("aliases and values") {
  RunConfig c;
  c.load_text("# comment\nsystem = B2\np = 5\nN = 7\nb = [2, 1]\nweyl_mode = paper-literal\nnabla_sign = minus\n");
  CHECK(c.system == "B2");
  CHECK(c.prime == 5);
  CHECK(c.truncation == 7);
  CHECK(c.divisor == IVec{2, 1});
  CHECK(c.weyl_mode == WeylMode::PaperLiteral);
  CHECK(c.nabla_sign == -1);
  CHECK_NOTHROW(c.validate());
  c.apply_override("divisor=[1,2,3]");
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(c.set("truncation", "0"), ConfigError);
  CHECK_THROWS_AS(c.set("checks", "[flatness, nope]"), ConfigError);
  CHECK_THROWS_AS(c.set("weyl_mode", "other"), ConfigError);
}

TEST_CASE("a misspelled key fails even after valid ones") {
  RunConfig c;
  CHECK_THROWS_AS(c.load_text("system = A2\nprime = 5\ncheck = 1\n"), ConfigError);
}

TEST_CASE("to_text is a fixed point of load_text") {
  RunConfig c;
  c.set("system", "A2");
  c.set("b", "[1,2]");
  c.set("lift_shift", "h + 2*l1");
  c.set("checks", "[flatness,ev_spectrum]");
  c.set("seed", "17");
  RunConfig d;
  d.load_text(c.to_text());
  CHECK(d.to_text() == c.to_text());
  CHECK(d.enabled("flatness"));
  CHECK_FALSE(d.enabled("cross_basis"));
}

TEST_CASE("lift shift must be linear") {
  RunConfig c;
  c.set("lift_shift", "h^2");
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.set("lift_shift", "t");
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.set("lift_shift", "2*h + l1");
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("unsupported systems") {
  RunConfig c;
  c.set("system", "E8");
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.set("system", "A4");
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.set("max_rank", "4");
  CHECK_NOTHROW(c.validate());
}
