// Acceptance run: one PASS/FAIL line per criterion, computed directly from the
// library with the thresholds pinned below. Exit status 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "iso3/catalog.hpp"
#include "iso3/expr.hpp"
#include "iso3/harness.hpp"
#include "iso3/ode.hpp"

using namespace iso3;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kGrid = 50;
constexpr double kInset = 1e-3;

constexpr double kScherkTol = 1e-8;
constexpr double kOracleTol = 1e-9;
constexpr std::size_t kOraclePoints = 100;
constexpr double kConstTol = 1e-8;
constexpr double kFlatTol = 1e-12;
constexpr std::size_t kMotions = 50;
constexpr std::size_t kMotionGrid = 20;
constexpr double kMotionTol = 1e-9;
constexpr double kReconSupTol = 1e-8;
constexpr double kOrderLo = 3.5, kOrderHi = 4.5;
constexpr double kTorsionTol = 1e-12;
constexpr double kLeadingFloor = 1e-8;
constexpr double kFdOrder = 2.0, kFdSlack = 0.5, kFdFinest = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double field_dev(const SurfaceChart& c, Curvature which, double target) {
  const CurvatureField f = curvature_field(c, GridSpec::over(c.domain(), kGrid, kGrid, kInset));
  double worst = 0.0;
  for (const auto& k : f.values) {
    worst = std::max(worst, std::abs((which == Curvature::K ? k.K : k.H) - target));
  }
  return worst;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome ac1() {
  double worst = 0.0;
  for (const auto& id : scherk_ids()) {
    worst = std::max(worst, field_dev(make_chart(theorem_family(id)), Curvature::H, 0.0));
  }
  return {worst < kScherkTol, "6 members, max|H| = " + sci(worst) + " < " + sci(kScherkTol)};
}

std::vector<FamilySpec> closed_form_specs() {
  std::vector<FamilySpec> specs;
  for (const auto& id : theorem_ids()) specs.push_back(theorem_family(id));
  FamilySpec a = family_spec("affine-second");
  a.frame = AffineFrame::make(1.0, 0.5, 0.3, 1.0);
  a.f = parse_profile("sin(t)");
  a.g = parse_profile("exp(t/2)");
  FamilySpec b = family_spec("type-II");
  b.a = 0.3;
  b.f = parse_profile("sin(x)");
  b.g = parse_profile("exp(y)");
  b.h = parse_profile("cos(y)");
  b.domain = Rect{{-1, 1}, {0.0, 0.7}};
  FamilySpec c = family_spec("type-III");
  c.a = 0.2;
  c.f = parse_profile("0.3*sin(x)");
  c.g = parse_profile("exp(y)");
  c.h = parse_profile("exp(2*y)");
  specs.push_back(a);
  specs.push_back(b);
  specs.push_back(c);
  return specs;
}

Outcome ac2() {
  Rng rng(kSeed);
  double worst = 0.0;
  std::size_t points = 0, families = 0;
  for (const auto& s : closed_form_specs()) {
    const SurfaceChart c = make_chart(s);
    const Rect& d = c.domain();
    ++families;
    for (std::size_t k = 0; k < kOraclePoints; ++k) {
      const double u = rng.uniform(d.u.lo + kInset, d.u.hi - kInset);
      const double v = rng.uniform(d.v.lo + kInset, d.v.hi - kInset);
      const FundamentalForms f = fundamental_forms(c.jet(u, v));
      const CurvatureScale sc = curvature_scale(f);
      worst = std::max({worst, oracle_deviation(closed_form_K(s, u, v), gauss_curvature(f), sc.K),
                        oracle_deviation(closed_form_H(s, u, v), mean_curvature(f), sc.H)});
      ++points;
    }
  }
  return {worst < kOracleTol, std::to_string(families) + " families x " +
                                  std::to_string(kOraclePoints) + " points, max scaled dev = " +
                                  sci(worst) + " < " + sci(kOracleTol)};
}

Outcome ac3() {
  double worst = 0.0;
  const FamilySpec k = theorem_family("4.2");
  const double dk = field_dev(make_chart(k), Curvature::K, -9.0 / 4.0);
  worst = dk;
  for (const auto& id : theorem_ids()) {
    if (id == "4.2") continue;
    const FamilySpec s = theorem_family(id);
    const double h0 = id.rfind("4.3", 0) == 0 ? 0.0 : s.expected->value;
    worst = std::max(worst, field_dev(make_chart(s), Curvature::H, h0));
  }
  return {worst < kConstTol, "|K + 9/4| = " + sci(dk) + ", max over 9 families = " + sci(worst) +
                                 " < " + sci(kConstTol)};
}

Outcome ac4() {
  std::vector<SurfaceChart> charts;
  for (const char* id : {"4.3a", "4.4a", "4.4b", "5.3a", "6.3"}) {
    charts.push_back(make_chart(theorem_family(id)));
  }
  const Rect sq{{-1, 1}, {-1, 1}};
  charts.push_back(make_affine_second(AffineFrame::make(1.0, 0.4, -0.2, 1.1),
                                      ProfileFn::affine(0.7, 0.1), parse_profile("exp(t)"), sq));
  charts.push_back(make_type_II(0.5, ProfileFn::affine(-1.2), parse_profile("exp(2*y)"),
                                parse_profile("sin(y)"), Rect{{-1, 1}, {0.6, 1.4}}));
  charts.push_back(make_type_III(0.3, ProfileFn::affine(-0.5), parse_profile("exp(y)"),
                                 parse_profile("y^4"), Rect{{-1, 1}, {0.5, 1.5}}));
  double worst = 0.0;
  for (const auto& c : charts) worst = std::max(worst, field_dev(c, Curvature::K, 0.0));
  return {worst < kFlatTol, std::to_string(charts.size()) + " f-affine charts, max|K| = " +
                                sci(worst) + " < " + sci(kFlatTol)};
}

Outcome ac5() {
  std::vector<std::string> ids = scherk_ids();
  for (const auto& id : theorem_ids()) ids.push_back(id);
  double worst_rel = 0.0, worst_abs = 0.0;
  std::size_t n = 0;
  for (const auto& id : ids) {
    const SurfaceChart c = make_chart(theorem_family(id));
    const GridSpec g = GridSpec::over(c.domain(), kMotionGrid, kMotionGrid, kInset);
    Rng rng(kSeed + n);
    const CurvatureField base = curvature_field(c, g);
    for (std::size_t k = 0; k < kMotions; ++k) {
      const CurvatureField moved = curvature_field(compose(random_motion(rng), c), g);
      for (std::size_t i = 0; i < base.values.size(); ++i) {
        const auto& a = base.values[i];
        const auto& b = moved.values[i];
        const double d = std::max(std::abs(a.K - b.K), std::abs(a.H - b.H));
        worst_abs = std::max(worst_abs, d);
        worst_rel = std::max(worst_rel, d / std::max({1.0, std::abs(a.K), std::abs(a.H)}));
      }
    }
    ++n;
  }
  // Near the Scherk branch lines K and H reach ~1e6, where a 1e-9 absolute
  // bound is below double resolution; the bound is applied relative to
  // max(1, |K|, |H|), which is the absolute bound wherever curvature is O(1).
  return {worst_rel < kMotionTol,
          std::to_string(n) + " charts x " + std::to_string(kMotions) +
              " motions, max rel dev = " + sci(worst_rel) + " < " + sci(kMotionTol) +
              " (max abs " + sci(worst_abs) + ")"};
}

Outcome ac6() {
  double sup = 0.0, lo = 1e9, hi = 0.0;
  for (const auto& id : reconstruction_ids()) {
    const ReconstructionReport r = reconstruct(id);
    sup = std::max(sup, r.sup_error);
    lo = std::min(lo, r.order);
    hi = std::max(hi, r.order);
  }
  const bool ok = sup < kReconSupTol && lo >= kOrderLo && hi <= kOrderHi;
  char buf[64];
  std::snprintf(buf, sizeof buf, "orders in [%.2f, %.2f]", lo, hi);
  return {ok, std::to_string(reconstruction_ids().size()) + " relations, sup error = " + sci(sup) +
                  " < " + sci(kReconSupTol) + ", " + buf};
}

Outcome ac7() {
  WitnessOptions o;
  o.torsion_tol = kTorsionTol;
  o.floor = kLeadingFloor;
  bool ok = true;
  std::size_t cases = 0;
  double torsion = 0.0, leading = 1e300;
  for (const auto& id : witness_ids()) {
    if (id.rfind("control", 0) == 0) continue;
    const WitnessReport w = nonexistence_witness(id, o);
    ++cases;
    ok = ok && w.contradiction;
    if (w.kind == WitnessKind::Vanishing) {
      torsion = std::max(torsion, w.max_abs);
      ok = ok && w.max_abs < kTorsionTol;
    }
    if (id == "thm6.1-poly") {
      leading = w.min_abs;
      ok = ok && w.min_abs > kLeadingFloor;
    }
  }
  ok = ok && cases == 6;
  return {ok, std::to_string(cases) + " cases confirmed, max torsion numerator = " + sci(torsion) +
                  ", min leading coefficient = " + sci(leading)};
}

Outcome ac8() {
  bool ok = true;
  double worst_order = 0.0, finest = 0.0;
  const auto charts = fd_test_charts();
  for (const auto& c : charts) {
    const Rect& d = c.domain();
    std::vector<std::pair<double, double>> pts;
    Rng rng(kSeed);
    for (int k = 0; k < 5; ++k) {
      pts.push_back({rng.uniform(d.u.lo + 0.05, d.u.hi - 0.05),
                     rng.uniform(d.v.lo + 0.05, d.v.hi - 0.05)});
    }
    const FdOracleResult r = fd_oracle(c, pts);
    // Second partials reach the roundoff floor eps/h^2 at h = 1e-4, so their
    // order is read between the first two steps only.
    std::vector<double> orders = r.first_order;
    orders.push_back(r.second_order.front());
    for (double o : orders) {
      worst_order = std::max(worst_order, std::abs(o - kFdOrder));
      ok = ok && std::abs(o - kFdOrder) < kFdSlack;
    }
    finest = std::max({finest, r.first_err.back(), r.second_err.back()});
    ok = ok && r.first_err.back() < kFdFinest && r.second_err.back() < kFdFinest;
  }
  return {ok, std::to_string(charts.size()) + " charts, max |order - 2| = " + sci(worst_order) +
                  ", rel error at h = 1e-4: " + sci(finest)};
}

Outcome ac9() {
  HarnessConfig cfg;
  cfg.seed = kSeed;
  const auto reports = run_suite("all", cfg);
  std::size_t controls = 0, real = 0;
  for (const auto& r : reports) (r.control ? controls : real)++;
  bool ok = suite_ok(reports);
  // The verdict must flip when a control passes or a real check fails.
  auto flipped = reports;
  for (auto& r : flipped) {
    if (r.control) {
      r.pass = true;
      break;
    }
  }
  ok = ok && !suite_ok(flipped);
  flipped = reports;
  for (auto& r : flipped) {
    if (!r.control) {
      r.pass = false;
      break;
    }
  }
  ok = ok && !suite_ok(flipped);
  return {ok, std::to_string(real) + " checks pass, " + std::to_string(controls) +
                  " controls fail as designed"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 Scherk minimality", ac1},   {"AC2 oracle equivalence", ac2},
      {"AC3 theorem constancy", ac3},   {"AC4 flatness", ac4},
      {"AC5 motion invariance", ac5},   {"AC6 ODE reconstruction", ac6},
      {"AC7 nonexistence witnesses", ac7}, {"AC8 differentiation oracle", ac8},
      {"AC9 power controls", ac9}};
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria met in %.1f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
