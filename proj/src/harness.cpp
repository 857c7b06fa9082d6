#include "iso3/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "iso3/error.hpp"
#include "iso3/ode.hpp"

namespace iso3 {

// ---- grid and fields --------------------------------------------------------

GridSpec GridSpec::over(const Rect& domain, std::size_t nu, std::size_t nv, double inset) {
  return {domain.u, domain.v, nu, nv, inset};
}

namespace {

double sample(const Interval& I, double inset, std::size_t i, std::size_t n) {
  const double lo = I.lo + inset, hi = I.hi - inset;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::string point_text(double u, double v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << u << ", " << v << ")";
  return os.str();
}

}  // namespace

double GridSpec::u_at(std::size_t i) const { return sample(u, inset, i, nu); }
double GridSpec::v_at(std::size_t j) const { return sample(v, inset, j, nv); }

std::string GridSpec::label() const { return std::to_string(nu) + "x" + std::to_string(nv); }

void GridSpec::validate(const Rect& domain) const {
  if (nu < 2 || nv < 2) throw DomainError("grid needs at least 2 samples per direction");
  if (!(inset >= 0.0)) throw DomainError("grid inset must be non-negative");
  const double ulo = u.lo + inset, uhi = u.hi - inset, vlo = v.lo + inset, vhi = v.hi - inset;
  if (!(ulo <= uhi && vlo <= vhi)) throw DomainError("grid inset swallows the range");
  if (!domain.contains(ulo, vlo) || !domain.contains(uhi, vhi)) {
    throw DomainError("grid leaves the chart domain");
  }
}

CurvatureField curvature_field(const SurfaceChart& chart, const GridSpec& grid) {
  grid.validate(chart.domain());
  CurvatureField field{grid, {}};
  field.values.reserve(grid.nu * grid.nv);
  for (std::size_t j = 0; j < grid.nv; ++j) {
    for (std::size_t i = 0; i < grid.nu; ++i) {
      const double u = grid.u_at(i), v = grid.v_at(j);
      try {
        field.values.push_back(curvatures_at(chart, u, v));
      } catch (const AdmissibilityError& e) {
        throw AdmissibilityError(chart.name() + " at " + point_text(u, v) + ": " + e.what());
      } catch (const DomainError& e) {
        throw DomainError(chart.name() + " at " + point_text(u, v) + ": " + e.what());
      }
    }
  }
  return field;
}

// ---- checks -----------------------------------------------------------------

namespace {

class Accumulator {
 public:
  void add(double dev, double u, double v) {
    // A NaN deviation becomes the worst point and stays there.
    if (!std::isnan(max_) && (std::isnan(dev) || dev > max_)) {
      max_ = dev;
      worst_ = {u, v};
    }
    sum_ += dev;
    ++n_;
  }

  VerificationReport report(double tol) const {
    VerificationReport r;
    r.max_dev = max_;
    r.mean_dev = n_ ? sum_ / static_cast<double>(n_) : 0.0;
    r.worst_point = worst_;
    r.tol = tol;
    r.pass = max_ < tol;
    return r;
  }

 private:
  double max_ = 0.0;
  double sum_ = 0.0;
  std::size_t n_ = 0;
  std::pair<double, double> worst_{0.0, 0.0};
};

double invariance_dev(const Curvatures& a, const Curvatures& b) {
  const double scale = std::max({1.0, std::abs(a.K), std::abs(a.H)});
  return std::max(std::abs(a.K - b.K), std::abs(a.H - b.H)) / scale;
}

}  // namespace

CurvatureScale curvature_scale(const FundamentalForms& ff) {
  return {(std::abs(ff.l * ff.n) + ff.m * ff.m) / ff.W,
          (std::abs(ff.E * ff.n) + 2.0 * std::abs(ff.F * ff.m) + std::abs(ff.G * ff.l)) /
              (2.0 * ff.W)};
}

double oracle_deviation(double closed, double kernel, double scale) {
  const double d = std::abs(closed - kernel);
  if (d == 0.0) return 0.0;
  return d / std::max({std::abs(kernel), scale, 1e-3});
}

VerificationReport check_constant(const CurvatureField& field, double target, Curvature which,
                                  double tol) {
  Accumulator acc;
  for (std::size_t j = 0; j < field.grid.nv; ++j) {
    for (std::size_t i = 0; i < field.grid.nu; ++i) {
      const Curvatures& c = field.values[j * field.grid.nu + i];
      const double val = which == Curvature::K ? c.K : c.H;
      acc.add(std::abs(val - target), field.grid.u_at(i), field.grid.v_at(j));
    }
  }
  auto r = acc.report(tol);
  r.grid = field.grid.label();
  std::ostringstream os;
  os.precision(17);
  os << "|" << to_string(which) << " - " << target << "|";
  r.metric = os.str();
  return r;
}

VerificationReport check_same_curvature(const SurfaceChart& chart, const SurfaceChart& other,
                                        const GridSpec& grid, double tol) {
  const CurvatureField a = curvature_field(chart, grid);
  const CurvatureField b = curvature_field(other, grid);
  Accumulator acc;
  for (std::size_t j = 0; j < grid.nv; ++j) {
    for (std::size_t i = 0; i < grid.nu; ++i) {
      const std::size_t k = j * grid.nu + i;
      acc.add(invariance_dev(a.values[k], b.values[k]), grid.u_at(i), grid.v_at(j));
    }
  }
  auto r = acc.report(tol);
  r.grid = grid.label();
  r.family = chart.name();
  r.metric = "max(|dK|, |dH|) / max(1, |K|, |H|)";
  return r;
}

VerificationReport check_motion_invariance(const SurfaceChart& chart, const IsotropicMotion& m,
                                           const GridSpec& grid, double tol) {
  return check_same_curvature(chart, compose(m, chart), grid, tol);
}

IsotropicMotion random_motion(Rng& rng) {
  IsotropicMotion m;
  m.a = rng.uniform(-2, 2);
  m.b = rng.uniform(-2, 2);
  m.c = rng.uniform(-2, 2);
  m.d = rng.uniform(-2, 2);
  m.e = rng.uniform(-2, 2);
  m.theta = rng.uniform(0, 2 * std::numbers::pi);
  return m;
}

// ---- differentiation oracle ---------------------------------------------------

namespace {

double rel_err(const Vec3& fd, const Vec3& ad) {
  double e = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    e = std::max(e, std::abs(fd[k] - ad[k]) / std::max(1.0, std::abs(ad[k])));
  }
  return e;
}

Vec3 combo(std::initializer_list<std::pair<double, Vec3>> terms, double scale) {
  Vec3 out{0, 0, 0};
  for (const auto& [c, p] : terms) {
    for (std::size_t k = 0; k < 3; ++k) out[k] += c * p[k];
  }
  for (auto& x : out) x /= scale;
  return out;
}

std::vector<double> orders(const std::vector<double>& steps, const std::vector<double>& err) {
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    out.push_back(std::log(err[k] / err[k + 1]) / std::log(steps[k] / steps[k + 1]));
  }
  return out;
}

}  // namespace

FdOracleResult fd_oracle(const SurfaceChart& chart,
                         const std::vector<std::pair<double, double>>& points,
                         const std::vector<double>& steps) {
  FdOracleResult res;
  res.chart = chart.name();
  res.steps = steps;
  for (double h : steps) {
    double e1 = 0.0, e2 = 0.0;
    for (const auto& [u, v] : points) {
      const Jet2 j = chart.jet(u, v);
      auto P = [&](double du, double dv) { return chart.point(u + du, v + dv); };
      const Vec3 p0 = P(0, 0);
      const Vec3 pu = P(h, 0), mu = P(-h, 0), pv = P(0, h), mv = P(0, -h);
      e1 = std::max(e1, rel_err(combo({{1, pu}, {-1, mu}}, 2 * h), j.du));
      e1 = std::max(e1, rel_err(combo({{1, pv}, {-1, mv}}, 2 * h), j.dv));
      e2 = std::max(e2, rel_err(combo({{1, pu}, {-2, p0}, {1, mu}}, h * h), j.duu));
      e2 = std::max(e2, rel_err(combo({{1, pv}, {-2, p0}, {1, mv}}, h * h), j.dvv));
      e2 = std::max(e2, rel_err(combo({{1, P(h, h)}, {-1, P(h, -h)}, {-1, P(-h, h)}, {1, P(-h, -h)}},
                                      4 * h * h),
                                j.duv));
    }
    res.first_err.push_back(e1);
    res.second_err.push_back(e2);
  }
  res.first_order = orders(steps, res.first_err);
  res.second_order = orders(steps, res.second_err);
  return res;
}

std::vector<SurfaceChart> fd_test_charts() {
  auto prof = [](std::string label, ProfileFn::Fn fn) { return ProfileFn(std::move(label), std::move(fn)); };
  std::vector<SurfaceChart> out;
  const auto fr = AffineFrame::make(1, 0.5, 0.3, 1);
  out.push_back(make_affine_second(fr, prof("sin(t)", [](const Taylor3& t) { return sin(t); }),
                                   prof("exp(t/2)", [](const Taylor3& t) { return exp(0.5 * t); }),
                                   Rect{{-1, 1}, {-1, 1}}));
  out.push_back(make_type_II(0.3, prof("sin(x)", [](const Taylor3& t) { return sin(t); }),
                             prof("exp(y)", [](const Taylor3& t) { return exp(t); }),
                             prof("cos(y)", [](const Taylor3& t) { return cos(t); }),
                             Rect{{-1, 1}, {0.5, 1.5}}));
  out.push_back(make_type_III(0.2, prof("0.3 sin(x)", [](const Taylor3& t) { return 0.3 * sin(t); }),
                              prof("exp(y)", [](const Taylor3& t) { return exp(t); }),
                              prof("exp(2y)", [](const Taylor3& t) { return exp(2.0 * t); }),
                              Rect{{-1, 1}, {0.5, 1.5}}));
  // Interior patch: within 2e-2 of the branch line cos = 0 the fourth
  // derivatives reach 1/cos^4 and the h = 1e-4 difference error exceeds 1e-6.
  out.push_back(make_chart(theorem_family("scherk-3")).with_domain(Rect{{0.2, 1.2}, {-1.2, -0.2}}));
  // Patch of a torus of revolution; its top view is regular for 0 < v < pi.
  out.push_back(SurfaceChart(Family::Generic, Rect{{0.0, 1.0}, {0.5, 1.5}},
                             [](const BiJet& u, const BiJet& v) {
                               const BiJet rho = 2.0 + cos(v);
                               return Triple<BiJet>{rho * cos(u), rho * sin(u), sin(v)};
                             },
                             {}, "torus-patch"));
  return out;
}

// ---- tolerances -------------------------------------------------------------

void Tolerances::override_all(double t) {
  closed = oracle = recon = recon_sup = flat = motion = witness = fd = t;
}

// ---- suites -----------------------------------------------------------------

namespace {

using Task = std::function<VerificationReport()>;

struct Check {
  std::string name;
  bool control = false;
  Task run;
};

std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (h | 1ull);  // splitmix64 finaliser
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

GridSpec grid_for(const SurfaceChart& chart, const HarnessConfig& c) {
  return GridSpec::over(chart.domain(), c.grid, c.grid, c.inset);
}

VerificationReport constancy(const FamilySpec& spec, Curvature which, double target,
                             const HarnessConfig& c, double tol) {
  const SurfaceChart chart = make_chart(spec);
  auto r = check_constant(curvature_field(chart, grid_for(chart, c)), target, which, tol);
  r.family = spec.id;
  return r;
}

FamilySpec scaled_f(FamilySpec s, double k) {
  const ProfileFn f = s.f;
  s.f = ProfileFn(std::to_string(k) + "*(" + f.label() + ")",
                  [f, k](const Taylor3& t) { return k * f(t); }, f.domain());
  return s;
}

void scherk_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& id : scherk_ids()) {
    out.push_back({"scherk:H=0:" + id, false, [id, &c] {
                     return constancy(theorem_family(id), Curvature::H, 0.0, c, c.tol.closed);
                   }});
  }
  out.push_back({"scherk:control:H=0.1:scherk-1", true, [&c] {
                   return constancy(theorem_family("scherk-1"), Curvature::H, 0.1, c, c.tol.closed);
                 }});
}

void theorem_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& id : theorem_ids()) {
    out.push_back({"theorems:constant:" + id, false, [id, &c] {
                     const FamilySpec s = theorem_family(id);
                     return constancy(s, s.expected->which, s.expected->value, c, c.tol.closed);
                   }});
  }
  out.push_back({"theorems:control:4.3c-perturbed-f", true, [&c] {
                   FamilySpec s = scaled_f(theorem_family("4.3c"), 1.01);
                   s.id += "-perturbed";
                   return constancy(s, Curvature::H, 0.0, c, c.tol.closed);
                 }});
}

std::vector<FamilySpec> flat_members() {
  auto prof = [](std::string label, ProfileFn::Fn fn) { return ProfileFn(std::move(label), std::move(fn)); };
  std::vector<FamilySpec> out;
  for (const char* id : {"4.3a", "4.4a", "4.4b", "5.3a", "6.3"}) out.push_back(theorem_family(id));

  FamilySpec a = family_spec("affine-second");
  a.id = "affine-second:f-affine";
  a.frame = AffineFrame::make(1, 0.5, 0.3, 1);
  a.f = ProfileFn::affine(0.7, 0.2);
  a.g = prof("exp(t/2)", [](const Taylor3& t) { return exp(0.5 * t); });
  out.push_back(a);

  FamilySpec b = family_spec("type-II");
  b.id = "type-II:f-affine";
  b.a = 0.3;
  b.f = ProfileFn::affine(0.4, -1.0);
  b.g = prof("exp(y)", [](const Taylor3& t) { return exp(t); });
  b.h = prof("cos(y)", [](const Taylor3& t) { return cos(t); });
  out.push_back(b);

  FamilySpec d = family_spec("type-III");
  d.id = "type-III:f-affine";
  d.a = 0.2;
  d.f = ProfileFn::affine(0.3, 0.5);
  d.g = prof("exp(y)", [](const Taylor3& t) { return exp(t); });
  d.h = prof("exp(2y)", [](const Taylor3& t) { return exp(2.0 * t); });
  out.push_back(d);
  return out;
}

void flatness_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& s : flat_members()) {
    out.push_back({"flatness:K=0:" + s.id, false,
                   [s, &c] { return constancy(s, Curvature::K, 0.0, c, c.tol.flat); }});
  }
  out.push_back({"flatness:control:type-II-f-quadratic", true, [&c] {
                   FamilySpec s = family_spec("type-II");
                   s.id = "type-II:f=x^2";
                   s.f = ProfileFn("x^2", [](const Taylor3& t) { return t * t; });
                   return constancy(s, Curvature::K, 0.0, c, c.tol.flat);
                 }});
}

std::vector<std::string> motion_charts() {
  auto ids = scherk_ids();
  for (const char* id : {"4.2", "4.3c", "4.4b", "5.3a", "5.3b", "6.3"}) ids.push_back(id);
  return ids;
}

void motion_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& id : motion_charts()) {
    const std::string name = "motions:random:" + id;
    out.push_back({name, false, [id, name, &c] {
                     const SurfaceChart chart = make_chart(family_spec(id));
                     const GridSpec grid = GridSpec::over(chart.domain(), c.motion_grid,
                                                          c.motion_grid, c.inset);
                     Rng rng(check_seed(c.seed, name));
                     const CurvatureField base = curvature_field(chart, grid);
                     Accumulator acc;
                     for (std::size_t k = 0; k < c.motions; ++k) {
                       const CurvatureField moved =
                           curvature_field(compose(random_motion(rng), chart), grid);
                       for (std::size_t j = 0; j < grid.nv; ++j) {
                         for (std::size_t i = 0; i < grid.nu; ++i) {
                           const std::size_t p = j * grid.nu + i;
                           acc.add(invariance_dev(base.values[p], moved.values[p]), grid.u_at(i),
                                   grid.v_at(j));
                         }
                       }
                     }
                     auto r = acc.report(c.tol.motion);
                     r.grid = grid.label() + "x" + std::to_string(c.motions) + " motions";
                     r.family = id;
                     r.metric = "max(|dK|, |dH|) / max(1, |K|, |H|)";
                     return r;
                   }});
  }
  out.push_back({"motions:identity:scherk-1", false, [&c] {
                   const SurfaceChart chart = make_chart(theorem_family("scherk-1"));
                   return check_motion_invariance(chart, IsotropicMotion{}, grid_for(chart, c),
                                                  c.tol.motion);
                 }});
  out.push_back({"motions:control:non-group-map", true, [&c] {
                   const SurfaceChart chart = make_chart(theorem_family("scherk-1"));
                   const SurfaceChart bent = compose(
                       [](const Triple<BiJet>& p) {
                         return Triple<BiJet>{p[0], p[1], p[2] + p[0] * p[0]};
                       },
                       chart, "scherk-1 with z + x^2");
                   return check_same_curvature(chart, bent, grid_for(chart, c), c.tol.motion);
                 }});
}

std::vector<FamilySpec> oracle_families() {
  std::vector<FamilySpec> out;
  for (const auto& id : theorem_ids()) out.push_back(theorem_family(id));
  for (const char* id : {"scherk-2", "scherk-5", "scherk-6"}) out.push_back(theorem_family(id));
  auto prof = [](std::string label, ProfileFn::Fn fn) { return ProfileFn(std::move(label), std::move(fn)); };
  FamilySpec a = family_spec("affine-second");
  a.id = "affine-second:generic";
  a.frame = AffineFrame::make(1, 0.5, 0.3, 1);
  a.f = prof("sin(t)", [](const Taylor3& t) { return sin(t); });
  a.g = prof("exp(t/2)", [](const Taylor3& t) { return exp(0.5 * t); });
  out.push_back(a);
  FamilySpec b = family_spec("type-II");
  b.id = "type-II:generic";
  b.a = 0.3;
  b.f = prof("sin(x)", [](const Taylor3& t) { return sin(t); });
  b.g = prof("exp(y)", [](const Taylor3& t) { return exp(t); });
  b.h = prof("cos(y)", [](const Taylor3& t) { return cos(t); });
  out.push_back(b);
  FamilySpec d = family_spec("type-III");
  d.id = "type-III:generic";
  d.a = 0.2;
  d.f = prof("0.3 sin(x)", [](const Taylor3& t) { return 0.3 * sin(t); });
  d.g = prof("exp(y)", [](const Taylor3& t) { return exp(t); });
  d.h = prof("exp(2y)", [](const Taylor3& t) { return exp(2.0 * t); });
  out.push_back(d);
  return out;
}

VerificationReport oracle_check(const FamilySpec& s, const std::string& name,
                                const HarnessConfig& c, double sign) {
  const SurfaceChart chart = make_chart(s);
  const Rect& d = chart.domain();
  Rng rng(check_seed(c.seed, name));
  Accumulator acc;
  for (std::size_t k = 0; k < c.oracle_points; ++k) {
    const double u = rng.uniform(d.u.lo + c.inset, d.u.hi - c.inset);
    const double v = rng.uniform(d.v.lo + c.inset, d.v.hi - c.inset);
    const FundamentalForms ff = fundamental_forms(chart.jet(u, v));
    const CurvatureScale scale = curvature_scale(ff);
    const double dK = oracle_deviation(closed_form_K(s, u, v), gauss_curvature(ff), scale.K);
    const double dH =
        oracle_deviation(sign * closed_form_H(s, u, v), mean_curvature(ff), scale.H);
    acc.add(std::max(dK, dH), u, v);
  }
  auto r = acc.report(c.tol.oracle);
  r.family = s.id;
  r.grid = std::to_string(c.oracle_points) + " random points";
  r.metric = "|closed - kernel| / max(|kernel|, term scale, 1e-3) over K and H";
  return r;
}

std::vector<std::pair<double, double>> fd_points(const SurfaceChart& chart, std::size_t n,
                                                 Rng& rng) {
  const double margin = 2e-2;  // keeps u +- h inside the domain for h <= 1e-2
  const Rect& d = chart.domain();
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < n; ++k) {
    pts.emplace_back(rng.uniform(d.u.lo + margin, d.u.hi - margin),
                     rng.uniform(d.v.lo + margin, d.v.hi - margin));
  }
  return pts;
}

void oracle_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& s : oracle_families()) {
    const std::string name = "oracles:closed-form:" + s.id;
    out.push_back({name, false, [s, name, &c] { return oracle_check(s, name, c, 1.0); }});
  }
  out.push_back({"oracles:control:sign-flipped-H:5.3a", true, [&c] {
                   return oracle_check(theorem_family("5.3a"), "oracles:control:sign-flipped-H:5.3a",
                                       c, -1.0);
                 }});

  const auto charts = fd_test_charts();
  for (std::size_t k = 0; k < charts.size(); ++k) {
    const std::string chart_name = charts[k].name();
    const std::string acc_name = "oracles:fd-accuracy:" + chart_name;
    const std::string ord_name = "oracles:fd-order:" + chart_name;
    auto compute = [k, &c](const std::string& name) {
      const SurfaceChart chart = fd_test_charts()[k];
      Rng rng(check_seed(c.seed, name));
      return fd_oracle(chart, fd_points(chart, c.fd_points, rng));
    };
    out.push_back({acc_name, false, [compute, acc_name, &c] {
                     const FdOracleResult res = compute(acc_name);
                     VerificationReport r;
                     r.family = res.chart;
                     r.max_dev = std::max(res.first_err.back(), res.second_err.back());
                     r.mean_dev = 0.5 * (res.first_err.back() + res.second_err.back());
                     r.tol = c.tol.fd;
                     r.pass = r.max_dev < r.tol;
                     std::ostringstream os;
                     os.precision(3);
                     os << "relative error of r_u, r_v, r_uu, r_uv, r_vv at h = " << res.steps.back();
                     r.metric = os.str();
                     r.grid = std::to_string(c.fd_points) + " random points";
                     return r;
                   }});
    out.push_back({ord_name, false, [compute, ord_name, &c] {
                     const FdOracleResult res = compute(ord_name);
                     // Second differences reach the rounding floor (eps / h^2) at the
                     // finest step, so their order is taken over the first pair only.
                     double dev = 0.0, sum = 0.0;
                     std::size_t n = 0;
                     for (double o : res.first_order) {
                       dev = std::max(dev, std::abs(o - 2.0));
                       sum += std::abs(o - 2.0);
                       ++n;
                     }
                     dev = std::max(dev, std::abs(res.second_order.front() - 2.0));
                     sum += std::abs(res.second_order.front() - 2.0);
                     ++n;
                     VerificationReport r;
                     r.family = res.chart;
                     r.max_dev = dev;
                     r.mean_dev = sum / static_cast<double>(n);
                     r.tol = c.tol.fd_order_slack;
                     r.pass = r.max_dev < r.tol;
                     r.metric = "|observed order - 2| over h in {1e-2, 1e-3, 1e-4}";
                     r.grid = std::to_string(c.fd_points) + " random points";
                     return r;
                   }});
  }
}

void reconstruction_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& id : reconstruction_ids()) {
    // One integration feeds three reports; recomputed per check to keep them independent.
    auto run = [id, &c] {
      ReconstructionOptions o;
      o.step = c.ode_step;
      return reconstruct(id, {}, o);
    };
    const std::string grid = "step " + [&] {
      std::ostringstream os;
      os << c.ode_step;
      return os.str();
    }();
    out.push_back({"reconstruction:sup-error:" + id, false, [run, id, grid, &c] {
                     const auto rep = run();
                     VerificationReport r;
                     r.family = id;
                     r.grid = grid;
                     r.max_dev = rep.sup_error;
                     double sum = 0.0;
                     for (const auto& comp : rep.components) sum += comp.sup_error;
                     r.mean_dev = sum / static_cast<double>(rep.components.size());
                     r.tol = c.tol.recon_sup;
                     r.pass = r.max_dev < r.tol;
                     r.metric = "sup |numeric - closed form| over state components";
                     return r;
                   }});
    out.push_back({"reconstruction:order:" + id, false, [run, id, &c] {
                     const auto rep = run();
                     VerificationReport r;
                     r.family = id;
                     r.grid = "steps " + std::to_string(rep.probe_steps[0]) + "/" +
                              std::to_string(rep.probe_steps[1]) + "/" +
                              std::to_string(rep.probe_steps[2]);
                     double dev = 0.0, sum = 0.0;
                     for (double f : rep.factors) {
                       const double d = std::max(c.tol.factor_lo / f, f / c.tol.factor_hi);
                       dev = std::max(dev, d);
                       sum += d;
                     }
                     r.max_dev = dev;
                     r.mean_dev = sum / static_cast<double>(rep.factors.size());
                     r.tol = 1.0;
                     r.pass = r.max_dev < r.tol && rep.order >= 3.5 && rep.order <= 4.5;
                     std::ostringstream os;
                     os.precision(4);
                     os << "max(lo/factor, factor/hi), factors";
                     for (double f : rep.factors) os << " " << f;
                     os << ", order " << rep.order;
                     r.metric = os.str();
                     return r;
                   }});
    out.push_back({"reconstruction:consistency:" + id, false, [run, id, &c] {
                     const auto rep = run();
                     VerificationReport r;
                     r.family = id;
                     r.grid = "21x21";
                     r.max_dev = rep.consistency_dev;
                     r.mean_dev = rep.consistency_dev;
                     r.tol = c.tol.recon;
                     r.pass = r.max_dev < r.tol;
                     r.metric = "|" + to_string(rep.which) + " - target| with reconstructed profiles";
                     return r;
                   }});
  }
  out.push_back({"reconstruction:control:4.4b-shifted-target", true, [&c] {
                   ReconstructionOptions o;
                   o.step = c.ode_step;
                   o.target_shift = 1e-3;
                   const auto rep = reconstruct("4.4b", {}, o);
                   VerificationReport r;
                   r.family = "4.4b";
                   r.grid = "21x21";
                   r.max_dev = rep.consistency_dev;
                   r.mean_dev = rep.consistency_dev;
                   r.tol = c.tol.recon;
                   r.pass = r.max_dev < r.tol;
                   r.metric = "|H - (H0 + 1e-3)| with reconstructed profiles";
                   return r;
                 }});
}

void witness_suite(std::vector<Check>& out, const HarnessConfig& c) {
  for (const auto& id : witness_ids()) {
    const bool control = id.rfind("control", 0) == 0;
    const std::string name = control ? "witnesses:control:" + id.substr(8) : "witnesses:" + id;
    out.push_back({name, control, [id, &c] {
                     WitnessOptions o;
                     o.torsion_tol = c.tol.witness;
                     o.floor = c.tol.witness_floor;
                     const WitnessReport w = nonexistence_witness(id, o);
                     VerificationReport r;
                     r.family = id;
                     r.grid = std::to_string(w.samples) + " samples";
                     if (w.kind == WitnessKind::Vanishing) {
                       r.max_dev = std::max(w.max_abs, w.relation_residual);
                       r.mean_dev = w.max_abs;
                       r.tol = o.torsion_tol;
                       r.metric = "max |" + w.quantity + "| and forced-relation residual";
                     } else {
                       r.max_dev = w.relation_residual < o.torsion_tol
                                       ? 1.0 / w.min_abs
                                       : std::numeric_limits<double>::infinity();
                       r.mean_dev = r.max_dev;
                       r.tol = 1.0 / o.floor;
                       r.metric = "1 / min |" + w.quantity + "|";
                     }
                     r.pass = r.max_dev < r.tol;
                     return r;
                   }});
  }
}

std::vector<Check> checks_for(std::string_view suite, const HarnessConfig& c) {
  std::vector<Check> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view s) {
    if (all || suite == s) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("scherk")) scherk_suite(out, c);
  if (want("theorems")) theorem_suite(out, c);
  if (want("flatness")) flatness_suite(out, c);
  if (want("motions")) motion_suite(out, c);
  if (want("oracles")) oracle_suite(out, c);
  if (want("reconstruction")) reconstruction_suite(out, c);
  if (want("witnesses")) witness_suite(out, c);
  if (!known) throw ConstraintError("unknown suite '" + std::string(suite) + "'");
  return out;
}

VerificationReport run_check(const Check& ch, const HarnessConfig& c) {
  VerificationReport r;
  try {
    r = ch.run();
  } catch (const std::exception& e) {
    r = VerificationReport{};
    r.max_dev = std::numeric_limits<double>::infinity();
    r.mean_dev = r.max_dev;
    r.pass = false;
    r.metric = std::string("error: ") + e.what();
  }
  r.check = ch.name;
  r.control = ch.control;
  r.seed = c.seed;
  return r;
}

}  // namespace

std::vector<std::string> suite_ids() {
  return {"all", "scherk", "theorems", "flatness", "motions", "oracles", "reconstruction",
          "witnesses"};
}

std::vector<VerificationReport> run_suite(std::string_view suite, const HarnessConfig& config) {
  const std::vector<Check> checks = checks_for(suite, config);
  std::size_t workers = config.workers ? config.workers : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, workers);

  std::vector<VerificationReport> reports(checks.size());
  for (std::size_t start = 0; start < checks.size(); start += workers) {
    const std::size_t end = std::min(checks.size(), start + workers);
    std::vector<std::future<VerificationReport>> batch;
    for (std::size_t k = start; k < end; ++k) {
      batch.push_back(std::async(std::launch::async,
                                 [&checks, &config, k] { return run_check(checks[k], config); }));
    }
    for (std::size_t k = start; k < end; ++k) reports[k] = batch[k - start].get();
  }
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.check < b.check; });
  return reports;
}

bool suite_ok(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.as_designed(); });
}

}  // namespace iso3
