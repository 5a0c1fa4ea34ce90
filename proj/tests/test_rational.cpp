#include <doctest.h>

#include "citerank/errors.hpp"
#include "citerank/rational.hpp"

using namespace citerank;

TEST_CASE("format_fixed rounds half away from zero") {
  CHECK(format_fixed(Rational(100, 6), 0) == "17");    // 16.67
  CHECK(format_fixed(Rational(500, 6), 0) == "83");    // 83.33
  CHECK(format_fixed(Rational(295, 2), 1) == "147.5");
  CHECK(format_fixed(Rational(1, 8), 2) == "0.13");    // 0.125 -> away
  CHECK(format_fixed(Rational(-1, 8), 2) == "-0.13");
  CHECK(format_fixed(Rational(7375, 100), 1) == "73.8");
  CHECK(format_fixed(Rational(0), 1) == "0.0");
  CHECK(format_fixed(Rational(100), 1) == "100.0");
}

TEST_CASE("round_half_away returns exact rationals") {
  CHECK(round_half_away(Rational(100, 57), 1) == Rational(18, 10));
  CHECK(round_half_away(Rational(100, 6), 0) == Rational(17));
  CHECK(round_half_away(Rational(-100, 6), 0) == Rational(-17));
}

TEST_CASE("rational_from_decimal") {
  CHECK(rational_from_decimal("0.10") == Rational(1, 10));
  CHECK(rational_from_decimal("0.25") == Rational(1, 4));
  CHECK(rational_from_decimal("90") == Rational(90));
  CHECK(rational_from_decimal("-1.5") == Rational(-3, 2));
  CHECK(rational_from_decimal(".5") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_decimal(""), ParseError);
  CHECK_THROWS_AS(rational_from_decimal("abc"), ParseError);
  CHECK_THROWS_AS(rational_from_decimal("1.2.3"), ParseError);
}
