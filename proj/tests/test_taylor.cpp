#include <doctest.h>

#include <cmath>
#include <functional>

#include "iso3/taylor.hpp"

using namespace iso3;

namespace {

// Fourth-order central differences of a scalar function.
double d1(const std::function<double(double)>& f, double t, double h = 1e-3) {
  return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
}
double d2(const std::function<double(double)>& f, double t, double h = 1e-3) {
  return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) /
         (12 * h * h);
}
double d3(const std::function<double(double)>& f, double t, double h = 2e-3) {
  return (f(t + 2 * h) - 2 * f(t + h) + 2 * f(t - h) - f(t - 2 * h)) / (2 * h * h * h);
}

void check_against_fd(const std::function<Taylor3(const Taylor3&)>& jet, double t) {
  auto f = [&](double s) { return jet(Taylor3::variable(s)).value(); };
  const Taylor3 j = jet(Taylor3::variable(t));
  CHECK(j[0] == doctest::Approx(f(t)).epsilon(1e-14));
  CHECK(j[1] == doctest::Approx(d1(f, t)).epsilon(1e-8));
  CHECK(j[2] == doctest::Approx(d2(f, t)).epsilon(1e-6));
  CHECK(j[3] == doctest::Approx(d3(f, t)).epsilon(1e-3));
}

}  // namespace

TEST_SUITE("taylor") {
  TEST_CASE("variable and constants") {
    const Taylor3 t = Taylor3::variable(2.0);
    CHECK(t[0] == 2.0);
    CHECK(t[1] == 1.0);
    CHECK(t[2] == 0.0);
    const Taylor3 c(5.0);
    CHECK(c.is_constant());
    CHECK(!t.is_constant());
  }

  TEST_CASE("polynomial derivatives are exact") {
    const Taylor3 t = Taylor3::variable(1.5);
    const Taylor3 p = pow(t, 3) - 2.0 * t * t + 4.0;
    CHECK(p[0] == doctest::Approx(1.5 * 1.5 * 1.5 - 2 * 2.25 + 4));
    CHECK(p[1] == doctest::Approx(3 * 2.25 - 4 * 1.5));
    CHECK(p[2] == doctest::Approx(6 * 1.5 - 4));
    CHECK(p[3] == doctest::Approx(6.0));
  }

  TEST_CASE("elementary functions against finite differences") {
    check_against_fd([](const Taylor3& x) { return sin(x); }, 0.7);
    check_against_fd([](const Taylor3& x) { return cos(x); }, -0.3);
    check_against_fd([](const Taylor3& x) { return tan(x); }, 0.4);
    check_against_fd([](const Taylor3& x) { return exp(x); }, 0.2);
    check_against_fd([](const Taylor3& x) { return log(x); }, 1.7);
    check_against_fd([](const Taylor3& x) { return sqrt(x); }, 2.3);
    check_against_fd([](const Taylor3& x) { return atan(x); }, 0.9);
    check_against_fd([](const Taylor3& x) { return pow(x, 2.0 / 3.0); }, 1.4);
    check_against_fd([](const Taylor3& x) { return pow(x, -2); }, 1.1);
    check_against_fd([](const Taylor3& x) { return 1.0 / (1.0 + x * x); }, 0.6);
  }

  TEST_CASE("chain rule through nested compositions") {
    check_against_fd([](const Taylor3& x) { return log(abs(cos(2.0 * x))); }, 0.3);
    check_against_fd([](const Taylor3& x) { return exp(sin(x) * x) / (2.0 + x); }, 0.5);
    check_against_fd([](const Taylor3& x) { return pow(x, Taylor3(1.5) + 0.0 * x); }, 1.2);
    check_against_fd([](const Taylor3& x) { return pow(1.0 + x * x, x); }, 0.8);
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(log(Taylor3::variable(0.0)), DomainError);
    CHECK_THROWS_AS(sqrt(Taylor3::variable(-1.0)), DomainError);
    CHECK_THROWS_AS(reciprocal(Taylor3::variable(0.0)), DomainError);
    CHECK_THROWS_AS(abs(Taylor3::variable(0.0)), DomainError);
    CHECK_THROWS_AS(pow(Taylor3::variable(-1.0), 0.5), DomainError);
    CHECK_NOTHROW(pow(Taylor3::variable(-1.0), 3.0));
  }

  TEST_CASE("bijet partials of a bivariate expression") {
    // phi(u, v) = exp(u) sin(v) + u^2 v
    const double u0 = 0.4, v0 = -0.9;
    const BiJet u = BiJet::u_variable(u0), v = BiJet::v_variable(v0);
    const BiJet p = exp(u) * sin(v) + u * u * v;
    const double eu = std::exp(u0), sv = std::sin(v0), cv = std::cos(v0);
    CHECK(p.val == doctest::Approx(eu * sv + u0 * u0 * v0));
    CHECK(p.du == doctest::Approx(eu * sv + 2 * u0 * v0));
    CHECK(p.dv == doctest::Approx(eu * cv + u0 * u0));
    CHECK(p.duu == doctest::Approx(eu * sv + 2 * v0));
    CHECK(p.duv == doctest::Approx(eu * cv + 2 * u0));
    CHECK(p.dvv == doctest::Approx(-eu * sv));
  }

  TEST_CASE("bijet quotient and lift") {
    const BiJet u = BiJet::u_variable(1.3), v = BiJet::v_variable(0.7);
    const BiJet q = u / v;
    CHECK(q.val == doctest::Approx(1.3 / 0.7));
    CHECK(q.du == doctest::Approx(1 / 0.7));
    CHECK(q.dv == doctest::Approx(-1.3 / (0.7 * 0.7)));
    CHECK(q.duv == doctest::Approx(-1 / (0.7 * 0.7)));
    CHECK(q.dvv == doctest::Approx(2 * 1.3 / (0.7 * 0.7 * 0.7)));
    CHECK(q.duu == 0.0);
  }
}
