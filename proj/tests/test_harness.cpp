#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "iso3/expr.hpp"
#include "iso3/harness.hpp"
#include "iso3/io.hpp"

using namespace iso3;

namespace {

HarnessConfig fast_config() {
  HarnessConfig c;
  c.grid = 20;
  c.motions = 5;
  c.motion_grid = 8;
  c.oracle_points = 20;
  return c;
}

std::size_t count_real(const std::vector<VerificationReport>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += !r.control;
  return n;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("grid spec sampling") {
    const GridSpec g = GridSpec::over(Rect{{0, 1}, {-2, 2}}, 11, 5, 0.0);
    CHECK(g.u_at(0) == 0.0);
    CHECK(g.u_at(10) == 1.0);
    CHECK(g.v_at(2) == doctest::Approx(0.0));
    CHECK(g.label() == "11x5");
    const GridSpec inset = GridSpec::over(Rect{{0, 1}, {0, 1}}, 3, 3, 0.1);
    CHECK(inset.u_at(0) == doctest::Approx(0.1));
    CHECK(inset.u_at(2) == doctest::Approx(0.9));
    CHECK_THROWS_AS(GridSpec::over(Rect{{0, 1}, {0, 1}}, 1, 3).validate(Rect{{0, 1}, {0, 1}}),
                    DomainError);
    CHECK_THROWS_AS(GridSpec::over(Rect{{0, 1}, {0, 1}}, 3, 3).validate(Rect{{0, 0.5}, {0, 1}}),
                    DomainError);
  }

  TEST_CASE("curvature fields") {
    const auto plane = make_chart(family_spec("orthogonal"));
    const CurvatureField p = curvature_field(plane, GridSpec::over(plane.domain(), 7, 7));
    REQUIRE(p.values.size() == 49);
    for (const auto& c : p.values) {
      CHECK(c.K == 0.0);
      CHECK(c.H == 0.0);
      CHECK(c.W == 1.0);
    }
    const auto saddle = make_chart(theorem_family("scherk-1"));
    const CurvatureField s = curvature_field(saddle, GridSpec::over(saddle.domain(), 11, 11, 0.0));
    for (const auto& c : s.values) {
      CHECK(c.H == 0.0);
      CHECK(c.K == -4.0);
    }
    const auto k = make_chart(theorem_family("4.2"));
    const CurvatureField kf = curvature_field(k, GridSpec::over(k.domain(), 11, 11));
    for (const auto& c : kf.values) CHECK(c.K == doctest::Approx(-2.25).epsilon(1e-12));
  }

  TEST_CASE("check_constant passes and fails as documented") {
    const auto plane = make_chart(family_spec("orthogonal"));
    const auto pf = curvature_field(plane, GridSpec::over(plane.domain()));
    CHECK(check_constant(pf, 0.0, Curvature::K, 1e-8).pass);

    FamilyInputs cube;
    cube.g = parse_profile("y^3");
    const auto h = make_chart(theorem_family("5.3a", cube));
    const auto hf = curvature_field(h, GridSpec::over(h.domain()));
    CHECK(check_constant(hf, 1.0, Curvature::H, 1e-8).pass);

    const auto sc = make_chart(theorem_family("scherk-1"));
    const auto sf = curvature_field(sc, GridSpec::over(sc.domain()));
    const VerificationReport r = check_constant(sf, 0.1, Curvature::H, 1e-8);
    CHECK(!r.pass);
    CHECK(r.max_dev == doctest::Approx(0.1));
    CHECK(r.mean_dev == doctest::Approx(0.1));
    CHECK(r.grid == "50x50");
  }

  TEST_CASE("motion invariance checks") {
    const auto sc = make_chart(theorem_family("scherk-2"));
    const GridSpec g = GridSpec::over(sc.domain(), 20, 20);
    const VerificationReport id = check_motion_invariance(sc, IsotropicMotion{}, g, 1e-9);
    CHECK(id.pass);
    CHECK(id.max_dev == 0.0);

    Rng rng(17);
    for (int k = 0; k < 5; ++k) {
      CHECK(check_motion_invariance(sc, random_motion(rng), g, 1e-9).pass);
    }

    const auto s1 = make_chart(theorem_family("scherk-1"));
    const SurfaceChart bent = compose(
        [](const Triple<BiJet>& p) { return Triple<BiJet>{p[0], p[1], p[2] + p[0] * p[0]}; }, s1,
        "bent");
    const VerificationReport r =
        check_same_curvature(s1, bent, GridSpec::over(s1.domain(), 20, 20), 1e-9);
    CHECK(!r.pass);
    CHECK(r.max_dev > 0.1);
  }

  TEST_CASE("random motions cover the documented ranges") {
    Rng rng(1);
    for (int k = 0; k < 200; ++k) {
      const IsotropicMotion m = random_motion(rng);
      for (double p : {m.a, m.b, m.c, m.d, m.e}) {
        CHECK(p >= -2.0);
        CHECK(p <= 2.0);
      }
      CHECK(m.theta >= 0.0);
      CHECK(m.theta < 2 * std::numbers::pi);
    }
    Rng a(5), b(5);
    for (int k = 0; k < 10; ++k) CHECK(a.uniform(0, 1) == b.uniform(0, 1));
  }

  TEST_CASE("finite-difference oracle shows second-order decay") {
    const auto charts = fd_test_charts();
    const std::vector<std::pair<double, double>> pts = {{0.3, 0.7}, {0.45, 0.9}};
    for (const auto& c : charts) {
      CAPTURE(c.name());
      std::vector<std::pair<double, double>> inside;
      const Rect& d = c.domain();
      for (auto [s, t] : pts) {
        inside.push_back({d.u.lo + s * (d.u.hi - d.u.lo), d.v.lo + t * (d.v.hi - d.v.lo)});
      }
      const FdOracleResult r = fd_oracle(c, inside);
      REQUIRE(r.first_order.size() == 2);
      for (double o : r.first_order) CHECK(std::abs(o - 2.0) < 0.5);
      CHECK(std::abs(r.second_order.front() - 2.0) < 0.5);
      CHECK(r.first_err.back() < 1e-6);
      CHECK(r.second_err.back() < 1e-6);
    }
  }

  TEST_CASE("suite shapes") {
    const HarnessConfig cfg = fast_config();
    const auto scherk = run_suite("scherk", cfg);
    CHECK(count_real(scherk) == 6);
    CHECK(scherk.size() == 7);
    CHECK(suite_ok(scherk));

    const auto theorems = run_suite("theorems", cfg);
    CHECK(count_real(theorems) == theorem_ids().size());
    CHECK(suite_ok(theorems));

    const auto witnesses = run_suite("witnesses", cfg);
    CHECK(count_real(witnesses) == 6);
    for (const auto& r : witnesses) CHECK(r.as_designed());
  }

  TEST_CASE("every suite carries a failing control and records the seed") {
    HarnessConfig cfg = fast_config();
    cfg.seed = 4242;
    const auto all = run_suite("all", cfg);
    std::map<std::string, int> controls;
    std::set<std::string> suites;
    for (const auto& r : all) {
      const std::string suite = r.check.substr(0, r.check.find(':'));
      suites.insert(suite);
      if (r.control) {
        ++controls[suite];
        CHECK(!r.pass);
      } else {
        CAPTURE(r.check);
        CAPTURE(r.metric);
        CHECK(r.pass);
      }
      CHECK(r.seed == 4242);
    }
    for (const auto& s : suites) CHECK(controls[s] >= 1);
    CHECK(suites.size() == suite_ids().size() - 1);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const auto& a, const auto& b) { return a.check < b.check; }));
    CHECK(suite_ok(all));
  }

  TEST_CASE("determinism across runs and worker counts") {
    HarnessConfig cfg = fast_config();
    cfg.seed = 7;
    const std::string a = to_json(run_suite("motions", cfg)).dump();
    const std::string b = to_json(run_suite("motions", cfg)).dump();
    cfg.workers = 1;
    const std::string c = to_json(run_suite("motions", cfg)).dump();
    CHECK(a == b);
    CHECK(a == c);
    cfg.seed = 8;
    CHECK(to_json(run_suite("motions", cfg)).dump() != a);
  }

  TEST_CASE("tolerances below the rounding floor fail honestly") {
    HarnessConfig cfg = fast_config();
    cfg.tol.override_all(1e-15);
    CHECK(!suite_ok(run_suite("theorems", cfg)));
  }

  TEST_CASE("errors inside checks become failing reports") {
    HarnessConfig cfg = fast_config();
    cfg.grid = 1;
    const auto rs = run_suite("scherk", cfg);
    REQUIRE(!rs.empty());
    for (const auto& r : rs) {
      CHECK(!r.pass);
      CHECK(std::isinf(r.max_dev));
      CHECK(r.metric.rfind("error: ", 0) == 0);
    }
    CHECK(!suite_ok(rs));
    CHECK_THROWS_AS(run_suite("nope", cfg), ConstraintError);
  }
}
