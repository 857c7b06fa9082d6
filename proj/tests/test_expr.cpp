#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "iso3/error.hpp"
#include "iso3/expr.hpp"

using namespace iso3;

TEST_SUITE("expr") {
  TEST_CASE("arithmetic and precedence") {
    CHECK(parse_profile("1 + 2 * 3").value(0.0) == 7.0);
    CHECK(parse_profile("(1 + 2) * 3").value(0.0) == 9.0);
    CHECK(parse_profile("2 ^ 3 ^ 2").value(0.0) == doctest::Approx(512.0));
    CHECK(parse_profile("-2 ^ 2").value(0.0) == doctest::Approx(-4.0));
    CHECK(parse_profile("2 ^ -1").value(0.0) == doctest::Approx(0.5));
    CHECK(parse_profile("8 / 4 / 2").value(0.0) == doctest::Approx(1.0));
    CHECK(parse_profile("1e-3 * 2").value(0.0) == doctest::Approx(2e-3));
  }

  TEST_CASE("constants and functions") {
    CHECK(parse_profile("pi").value(0.0) == doctest::Approx(std::numbers::pi));
    CHECK(parse_profile("e").value(0.0) == doctest::Approx(std::numbers::e));
    CHECK(parse_profile("sin(pi / 2)").value(0.0) == doctest::Approx(1.0));
    CHECK(parse_profile("atan(1)").value(0.0) == doctest::Approx(std::numbers::pi / 4));
    CHECK(parse_profile("abs(-3)").value(0.0) == doctest::Approx(3.0));
  }

  TEST_CASE("derivatives follow the jet rules") {
    const ProfileFn p = parse_profile("t^3 - 2*t");
    const Taylor3 j = p.eval(2.0);
    CHECK(j[0] == doctest::Approx(4.0));
    CHECK(j[1] == doctest::Approx(10.0));
    CHECK(j[2] == doctest::Approx(12.0));
    CHECK(j[3] == doctest::Approx(6.0));

    const ProfileFn q = parse_profile("log(abs(cos(y)))");
    const Taylor3 k = q.eval(0.5);
    const double t = std::tan(0.5);
    CHECK(k[1] == doctest::Approx(-t));
    CHECK(k[2] == doctest::Approx(-(1 + t * t)));
    CHECK(k[3] == doctest::Approx(-2 * t * (1 + t * t)));
  }

  TEST_CASE("fractional power of the variable") {
    const ProfileFn p = parse_profile("v^(2/3)");
    const Taylor3 j = p.eval(8.0);
    CHECK(j[0] == doctest::Approx(4.0));
    CHECK(j[1] == doctest::Approx(2.0 / 3.0 / 2.0));
  }

  TEST_CASE("any identifier is the variable, but only one") {
    CHECK(parse_profile("x*x").value(3.0) == doctest::Approx(9.0));
    CHECK(parse_profile("zeta + 1").value(1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(parse_profile("x + y"), ParseError);
  }

  TEST_CASE("syntax errors name the column") {
    try {
      parse_profile("1 + * 2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_profile(""), ParseError);
    CHECK_THROWS_AS(parse_profile("sin(x"), ParseError);
    CHECK_THROWS_AS(parse_profile("2 3"), ParseError);
    CHECK_THROWS_AS(parse_profile("foo(x)"), ParseError);
  }

  TEST_CASE("domain violations surface as DomainError") {
    CHECK_THROWS_AS(parse_profile("log(x)").eval(-1.0), DomainError);
    const ProfileFn p = parse_profile("x", Interval{0.0, 1.0});
    CHECK_NOTHROW(p.eval(0.5));
    CHECK_THROWS_AS(p.eval(2.0), DomainError);
  }
}
