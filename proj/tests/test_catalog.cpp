#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "iso3/catalog.hpp"
#include "iso3/expr.hpp"
#include "iso3/harness.hpp"

using namespace iso3;

namespace {

const Rect kSquare{{-1.0, 1.0}, {-1.0, 1.0}};
const Rect kUpper{{-1.0, 1.0}, {0.5, 1.5}};

double max_abs_over(const SurfaceChart& c, Curvature which, double target, std::size_t n = 50) {
  const CurvatureField f = curvature_field(c, GridSpec::over(c.domain(), n, n));
  double worst = 0.0;
  for (const auto& k : f.values) {
    worst = std::max(worst, std::abs((which == Curvature::K ? k.K : k.H) - target));
  }
  return worst;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("orthogonal types") {
    const auto plane = make_orthogonal_type(OrthoKind::I1, ProfileFn::zero(), ProfileFn::zero(),
                                            kSquare);
    CHECK(max_abs_over(plane, Curvature::K, 0.0, 11) == 0.0);
    CHECK(max_abs_over(plane, Curvature::H, 0.0, 11) == 0.0);

    const auto saddle = make_orthogonal_type(OrthoKind::I1, parse_profile("x^2"),
                                             parse_profile("-y^2"), kSquare);
    CHECK(max_abs_over(saddle, Curvature::H, 0.0, 11) < 1e-14);
    CHECK(max_abs_over(saddle, Curvature::K, -4.0, 11) < 1e-14);

    // x = (1/2c) log|cos(cz)/cos(cy)| is 1/2 (f(y) + g(z)) with c = 1.
    const double b = std::acos(0.0) - kBranchInset;
    const auto scherk = make_orthogonal_type(OrthoKind::I3, parse_profile("-log(cos(y))"),
                                             parse_profile("log(cos(z))"),
                                             Rect{{0.1, b}, {-b, -0.1}});
    CHECK(max_abs_over(scherk, Curvature::H, 0.0) < 1e-8);
  }

  TEST_CASE("affine translation surfaces of the first kind") {
    const auto plane = make_affine_first(AffineFrame::identity(), ProfileFn::zero(),
                                         ProfileFn::zero(), kSquare);
    CHECK(max_abs_over(plane, Curvature::H, 0.0, 11) == 0.0);

    const double a11 = 1.0, a12 = 0.5, a21 = -0.3, a22 = 1.2, c = 0.8;
    const double ratio = (a11 * a11 + a12 * a12) / (a21 * a21 + a22 * a22);
    const auto member =
        make_affine_first(AffineFrame::make(a11, a12, a21, a22), parse_profile("0.8*t^2"),
                          ProfileFn("q", [=](const Taylor3& t) { return -c * ratio * t * t; }),
                          kSquare);
    CHECK(max_abs_over(member, Curvature::H, 0.0) < 1e-12);

    // u = a11 x + a12 y = x, v = a21 x + a22 y = x + y, so z(1, 0) = 1 + 1.
    const auto sum = make_affine_first(AffineFrame::make(1, 0, 1, 1), parse_profile("t^2"),
                                       parse_profile("t^3"), kSquare);
    CHECK(sum.point(1.0, 0.0)[2] == doctest::Approx(2.0));
  }

  TEST_CASE("affine translation surfaces of the second kind") {
    const auto plane = make_affine_second(AffineFrame::identity(), ProfileFn::zero(),
                                          parse_profile("t"), kSquare);
    const Vec3 p = plane.point(0.3, -0.4);
    CHECK(p[1] == doctest::Approx(p[2]));
    CHECK(max_abs_over(plane, Curvature::K, 0.0, 11) == 0.0);

    const auto k = make_affine_second(AffineFrame::identity(), parse_profile("t^2"),
                                      parse_profile("t^(2/3)", Interval{1e-3, 10}),
                                      Rect{{-1, 1}, {1, 2}});
    CHECK(max_abs_over(k, Curvature::K, -2.25) < 1e-8);

    // f = log|cos t|, g = -log|t| is minimal with c1 = 1 and the identity frame.
    const auto m = make_affine_second(AffineFrame::identity(), parse_profile("log(cos(t))"),
                                      parse_profile("-log(t)"), Rect{{-1, 1}, {0.5, 1.5}});
    CHECK(max_abs_over(m, Curvature::H, 0.0) < 1e-8);

    // a12 f' + a22 g' = 0 at z = 0.
    CHECK_THROWS_AS(make_affine_second(AffineFrame::identity(), ProfileFn::zero(),
                                       parse_profile("t^2"), kSquare),
                    RegularityError);
    CHECK_THROWS_AS(AffineFrame::make(1, 2, 2, 4), ConstraintError);
  }

  TEST_CASE("type II construction and rejection") {
    CHECK_NOTHROW(make_type_II(0.0, ProfileFn::zero(), parse_profile("y^3"),
                               parse_profile("y^2"), kUpper));
    const std::string torsion = message_of([] {
      make_type_II(0.0, ProfileFn::zero(), parse_profile("y^2"), parse_profile("2*y^2 + y"),
                   kUpper);
    });
    CHECK(torsion.find("g″h‴ − g‴h″") != std::string::npos);
    CHECK_THROWS_AS(make_type_II(0.0, ProfileFn::zero(), parse_profile("y^2"),
                                 parse_profile("2*y^2 + y"), kUpper),
                    RegularityError);
    const std::string reg = message_of([] {
      make_type_II(1.0, ProfileFn::zero(), parse_profile("y"), parse_profile("y^3"), kUpper);
    });
    CHECK(reg.find("g′ − a ≠ 0") != std::string::npos);
  }

  TEST_CASE("type III construction and rejection") {
    CHECK_NOTHROW(make_type_III(0.0, ProfileFn::zero(), parse_profile("y^3"),
                                parse_profile("y^2"), kUpper));
    const std::string reg = message_of([] {
      make_type_III(0.0, parse_profile("t"), parse_profile("t"), parse_profile("t^3"), kUpper);
    });
    CHECK(reg.find("g′ − f′ ≠ 0") != std::string::npos);
    CHECK_THROWS_AS(make_type_III(0.0, ProfileFn::zero(), parse_profile("y^2"),
                                  parse_profile("y^2"), kUpper),
                    RegularityError);
  }

  TEST_CASE("closed forms at the documented points") {
    const FamilySpec k = theorem_family("4.2");
    CHECK(closed_form_K(k, 0.0, 1.0) == doctest::Approx(-2.25));

    FamilySpec flat2 = family_spec("type-II");
    flat2.f = parse_profile("2*x + 1");
    flat2.g = parse_profile("exp(y)");
    flat2.h = parse_profile("sin(y)");
    FamilySpec flat3 = family_spec("type-III");
    flat3.a = 0.4;
    flat3.f = parse_profile("-x");
    flat3.g = parse_profile("exp(y)");
    flat3.h = parse_profile("y^4");
    for (double u : {-0.7, 0.0, 0.9}) {
      for (double v : {0.6, 1.0, 1.4}) {
        CHECK(std::abs(closed_form_K(flat2, u, v)) < 1e-14);
        CHECK(std::abs(closed_form_K(flat3, u, v)) < 1e-14);
      }
    }

    const FamilySpec c = theorem_family("4.3c");
    FamilyInputs cube;
    cube.g = parse_profile("y^3");
    const FamilySpec a = theorem_family("5.3a", cube);
    const FamilySpec t = theorem_family("6.3", cube);
    for (double s : {0.2, 0.5, 0.9}) {
      CHECK(std::abs(closed_form_H(c, s, 0.1)) < 1e-12);
      CHECK(closed_form_H(a, s - 0.5, 0.5 + s) == doctest::Approx(1.0));
      CHECK(closed_form_H(t, s - 0.5, 0.5 + s) == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(closed_form_H(theorem_family("scherk-1"), 0.0, 0.0), ConstraintError);
  }

  TEST_CASE("theorem families carry their expected curvature") {
    const FamilySpec k = theorem_family("4.2");
    REQUIRE(k.expected);
    CHECK(k.expected->which == Curvature::K);
    CHECK(k.expected->value == doctest::Approx(-9.0 / 4.0));

    FamilyInputs in;
    in.g = parse_profile("y^3");
    const FamilySpec h = theorem_family("5.3a", in);
    REQUIRE(h.expected);
    CHECK(h.expected->value == 1.0);
    for (double y : {0.5, 1.0, 1.5}) {
      CHECK(h.h.value(y) == doctest::Approx(std::pow(y, 6) + y));
    }

    const FamilySpec s = theorem_family("scherk-1");
    const SurfaceChart sc = make_chart(s);
    CHECK(sc.point(0.5, -0.25)[2] == doctest::Approx(0.25 - 0.0625));
    CHECK(s.expected->value == 0.0);
  }

  TEST_CASE("input validation") {
    FamilyInputs bad;
    bad.constants["zz"] = 1.0;
    CHECK_THROWS_AS(theorem_family("4.2", bad), ConstraintError);
    CHECK_THROWS_AS(family_spec("no-such-family"), ConstraintError);

    FamilyInputs c3;
    c3.constants["c3"] = 0.25;
    CHECK_THROWS_AS(theorem_family("4.4b", c3), ConstraintError);
    FamilyInputs ok;
    ok.constants["c3"] = -0.5;
    CHECK_NOTHROW(theorem_family("4.4b", ok));
  }

  TEST_CASE("catalog listing") {
    const auto& list = list_catalog();
    std::vector<std::string> ids;
    for (const auto& d : list) ids.push_back(d.id);
    std::vector<std::string> expected = {"orthogonal", "affine-first", "affine-second",
                                         "type-II", "type-III"};
    for (const auto& t : theorem_ids()) expected.push_back(t);
    for (const auto& s : scherk_ids()) expected.push_back(s);
    CHECK(ids == expected);
    CHECK(theorem_ids().size() == 9);
    CHECK(scherk_ids().size() == 6);
    for (const auto& d : list) {
      CHECK(!d.anchor.empty());
      CHECK(!d.summary.empty());
    }
    std::vector<std::string> again;
    for (const auto& d : list_catalog()) again.push_back(d.id);
    CHECK(again == ids);
    CHECK(describe_family("4.2").constraints.size() >= 2);
  }

  TEST_CASE("property: constancy of every theorem and Scherk family on 50x50") {
    std::vector<std::string> ids = theorem_ids();
    for (const auto& s : scherk_ids()) ids.push_back(s);
    for (const auto& id : ids) {
      CAPTURE(id);
      const FamilySpec s = theorem_family(id);
      REQUIRE(s.expected);
      const SurfaceChart c = make_chart(s);
      CHECK(max_abs_over(c, s.expected->which, s.expected->value) < 1e-8);
    }
  }

  TEST_CASE("property: Scherk members are not planar") {
    for (const auto& id : scherk_ids()) {
      CAPTURE(id);
      const SurfaceChart c = make_chart(theorem_family(id));
      const Rect& d = c.domain();
      const double u = 0.5 * (d.u.lo + d.u.hi), v = 0.5 * (d.v.lo + d.v.hi);
      CHECK(std::abs(curvatures_at(c, u, v).K) > 1e-3);
    }
  }

  TEST_CASE("property: f-affine members are flat") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> A(-1.5, 1.5), S(0.1, 1.5);
    for (int k = 0; k < 6; ++k) {
      // s > 0 keeps a12·f′ + a22·g′ bounded away from zero; near that
      // condition W collapses and K is cancellation noise, not curvature.
      const double s = S(gen), o = A(gen), a = A(gen);
      const ProfileFn f = ProfileFn::affine(s, o);
      const auto second = make_affine_second(AffineFrame::make(1.0, 0.4, a, 1.1), f,
                                             parse_profile("exp(t)"), kSquare);
      const auto two = make_type_II(a, f, parse_profile("exp(2*y)"), parse_profile("sin(y)"),
                                    Rect{{-1, 1}, {0.6, 1.4}});
      CHECK(max_abs_over(second, Curvature::K, 0.0) < 1e-12);
      CHECK(max_abs_over(two, Curvature::K, 0.0) < 1e-12);
    }
    const auto three = make_type_III(0.3, ProfileFn::affine(-0.5), parse_profile("exp(y)"),
                                     parse_profile("y^4"), kUpper);
    CHECK(max_abs_over(three, Curvature::K, 0.0) < 1e-12);
  }

  TEST_CASE("property: closed forms agree with the kernel at random points") {
    std::vector<FamilySpec> specs;
    for (const auto& id : theorem_ids()) specs.push_back(theorem_family(id));
    FamilySpec gen2 = family_spec("affine-second");
    gen2.frame = AffineFrame::make(1.0, 0.5, 0.3, 1.0);
    gen2.f = parse_profile("sin(t)");
    gen2.g = parse_profile("exp(t/2)");
    specs.push_back(gen2);
    FamilySpec gen3 = family_spec("type-III");
    gen3.a = 0.2;
    gen3.f = parse_profile("0.3*sin(x)");
    gen3.g = parse_profile("exp(y)");
    gen3.h = parse_profile("exp(2*y)");
    specs.push_back(gen3);
    Rng rng(99);
    for (const auto& s : specs) {
      CAPTURE(s.id);
      REQUIRE(has_closed_form(s));
      const SurfaceChart c = make_chart(s);
      const Rect& d = c.domain();
      for (int k = 0; k < 100; ++k) {
        const double u = rng.uniform(d.u.lo + 1e-3, d.u.hi - 1e-3);
        const double v = rng.uniform(d.v.lo + 1e-3, d.v.hi - 1e-3);
        const FundamentalForms f = fundamental_forms(c.jet(u, v));
        const CurvatureScale sc = curvature_scale(f);
        CHECK(oracle_deviation(closed_form_K(s, u, v), gauss_curvature(f), sc.K) < 1e-9);
        CHECK(oracle_deviation(closed_form_H(s, u, v), mean_curvature(f), sc.H) < 1e-9);
      }
    }
  }

  TEST_CASE("property: regularity rejection is total") {
    // The validator samples a 101x101 grid; a violation at an interior grid
    // line must be caught whatever the profiles.
    const ValidationOptions opts;
    CHECK(opts.grid == 101);
    CHECK_THROWS_AS(make_type_II(0.0, ProfileFn::zero(), parse_profile("(y-1)^2"),
                                 parse_profile("y^3"), Rect{{-1, 1}, {0.0, 2.0}}),
                    RegularityError);
    CHECK_THROWS_AS(make_type_III(0.0, parse_profile("x^2"), parse_profile("y^2"),
                                  parse_profile("exp(y)"), kSquare),
                    RegularityError);
  }
}
