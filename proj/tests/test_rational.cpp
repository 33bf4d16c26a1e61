#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corput/rational.hpp"

using namespace corput;

TEST_CASE("canonical form and formatting") {
  Rational q(26, 64);
  CHECK(rat_num(q) == 13);
  CHECK(rat_den(q) == 32);
  CHECK(rational_str(q) == "13/32");
  CHECK(rational_str(Rational(0)) == "0");
  CHECK(rational_str(Rational(-3, 4)) == "-3/4");
  CHECK(rational_str(Rational(8, 2)) == "4");
}

TEST_CASE("parsing") {
  CHECK(*parse_rational("13/32") == Rational(13, 32));
  CHECK(*parse_rational("0") == Rational(0));
  CHECK(*parse_rational("-3/4") == Rational(-3, 4));
  CHECK(*parse_rational("0.35") == Rational(7, 20));
  CHECK(*parse_rational(".5") == Rational(1, 2));
  CHECK(*parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(*parse_rational("1e2") == Rational(100));
  CHECK(!parse_rational("abc"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational(""));
}

TEST_CASE("floor and fractional part") {
  CHECK(floor_rat(Rational(7, 2)) == 3);
  CHECK(floor_rat(Rational(-1, 2)) == -1);
  CHECK(floor_rat(Rational(4)) == 4);
  CHECK(frac1(Rational(7, 2)) == Rational(1, 2));
  CHECK(frac1(Rational(-1, 4)) == Rational(3, 4));
  CHECK(frac1(Rational(3)) == 0);
}

TEST_CASE("round trip through text") {
  for (int num = -20; num <= 20; ++num) {
    for (int den = 1; den <= 12; ++den) {
      Rational q(num, den);
      CHECK(*parse_rational(rational_str(q)) == q);
    }
  }
}

TEST_CASE("dyadic snapping") {
  auto q = snap_dyadic(0.8125, 4, 1e-9);
  REQUIRE(q);
  CHECK(*q == Rational(13, 16));
  CHECK(!snap_dyadic(0.3, 4, 1e-9));
  auto z = snap_dyadic(1e-12, 4, 1e-9);
  REQUIRE(z);
  CHECK(*z == 0);
}

TEST_CASE("dyadic exponent") {
  CHECK(*dyadic_exponent(Rational(13, 32)) == 5);
  CHECK(*dyadic_exponent(Rational(0)) == 0);
  CHECK(*dyadic_exponent(Rational(3, 4)) == 2);
  CHECK(!dyadic_exponent(Rational(1, 3)));
}
