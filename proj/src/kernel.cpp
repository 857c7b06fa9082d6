#include "iso3/kernel.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "iso3/error.hpp"

namespace iso3 {

namespace {

bool finite(const Vec3& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

void require_unit_speed(const CurveJet3& jet, double eps_unit) {
  const double speed2 = jet.d1[0] * jet.d1[0] + jet.d1[1] * jet.d1[1];
  if (!(std::abs(speed2 - 1.0) < eps_unit)) {
    std::ostringstream os;
    os << "curve is not unit speed in the top view: x'^2 + y'^2 = " << speed2;
    throw DomainError(os.str());
  }
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Generic: return "generic";
    case Family::I1: return "I1*";
    case Family::I2: return "I2*";
    case Family::I3: return "I3*";
    case Family::AffineFirst: return "affine-first";
    case Family::AffineSecond: return "affine-second";
    case Family::TypeII: return "type-II";
    case Family::TypeIII: return "type-III";
  }
  return "unknown";
}

Jet2 Jet2::from(const Triple<BiJet>& r) {
  Jet2 j;
  for (std::size_t k = 0; k < 3; ++k) {
    j.value[k] = r[k].val;
    j.du[k] = r[k].du;
    j.dv[k] = r[k].dv;
    j.duu[k] = r[k].duu;
    j.duv[k] = r[k].duv;
    j.dvv[k] = r[k].dvv;
  }
  if (!(finite(j.value) && finite(j.du) && finite(j.dv) && finite(j.duu) && finite(j.duv) &&
        finite(j.dvv))) {
    throw DomainError("non-finite surface jet");
  }
  return j;
}

CurveJet3 CurveJet3::from(const Triple<Taylor3>& c) {
  CurveJet3 j;
  for (std::size_t k = 0; k < 3; ++k) {
    j.value[k] = c[k][0];
    j.d1[k] = c[k][1];
    j.d2[k] = c[k][2];
    j.d3[k] = c[k][3];
  }
  if (!(finite(j.value) && finite(j.d1) && finite(j.d2) && finite(j.d3))) {
    throw DomainError("non-finite curve jet");
  }
  return j;
}

SurfaceChart::SurfaceChart(Family family, Rect domain, ChartMap map, Params params,
                           std::string name)
    : family_(family),
      domain_(domain),
      map_(std::move(map)),
      params_(std::move(params)),
      name_(name.empty() ? to_string(family) : std::move(name)) {}

Jet2 SurfaceChart::jet(double u, double v) const {
  if (!domain_.contains(u, v)) {
    std::ostringstream os;
    os.precision(17);
    os << "chart '" << name_ << "': point (" << u << ", " << v << ") outside domain";
    throw DomainError(os.str());
  }
  return Jet2::from(map_(BiJet::u_variable(u), BiJet::v_variable(v)));
}

Vec3 SurfaceChart::point(double u, double v) const {
  if (!domain_.contains(u, v)) throw DomainError("chart '" + name_ + "': point outside domain");
  const auto r = map_(BiJet(u), BiJet(v));
  Vec3 p{r[0].val, r[1].val, r[2].val};
  if (!finite(p)) throw DomainError("chart '" + name_ + "': non-finite point");
  return p;
}

Jet2 eval_jet2(const SurfaceChart& chart, double u, double v) { return chart.jet(u, v); }

FundamentalForms fundamental_forms(const Jet2& j, double eps_reg) {
  FundamentalForms ff;
  const Vec3& ru = j.du;
  const Vec3& rv = j.dv;
  ff.E = ru[0] * ru[0] + ru[1] * ru[1];
  ff.F = ru[0] * rv[0] + ru[1] * rv[1];
  ff.G = rv[0] * rv[0] + rv[1] * rv[1];
  ff.W = ff.E * ff.G - ff.F * ff.F;
  if (!(ff.W > eps_reg)) {
    std::ostringstream os;
    os << "non-admissible point: W = " << ff.W << " (isotropic tangent plane)";
    throw AdmissibilityError(os.str());
  }
  const double orientation = ru[0] * rv[1] - rv[0] * ru[1];
  const double root = std::copysign(std::sqrt(ff.W), orientation);
  ff.l = det3(j.duu, ru, rv) / root;
  ff.m = det3(j.duv, ru, rv) / root;
  ff.n = det3(j.dvv, ru, rv) / root;
  return ff;
}

double gauss_curvature(const FundamentalForms& ff) { return (ff.l * ff.n - ff.m * ff.m) / ff.W; }

double mean_curvature(const FundamentalForms& ff) {
  return (ff.E * ff.n - 2.0 * ff.F * ff.m + ff.G * ff.l) / (2.0 * ff.W);
}

Curvatures curvatures_at(const SurfaceChart& chart, double u, double v) {
  const auto ff = fundamental_forms(chart.jet(u, v));
  return {gauss_curvature(ff), mean_curvature(ff), ff.W};
}

double curve_curvature(const CurveJet3& j, double eps_unit) {
  require_unit_speed(j, eps_unit);
  return std::hypot(j.d2[0], j.d2[1]);
}

double curve_curvature_signed(const CurveJet3& j, double eps_unit) {
  require_unit_speed(j, eps_unit);
  return j.d1[0] * j.d2[1] - j.d2[0] * j.d1[1];
}

double curve_torsion_numerator(const CurveJet3& j) { return det3(j.d1, j.d2, j.d3); }

SurfaceChart compose(const IsotropicMotion& m, const SurfaceChart& chart) {
  ChartMap inner = chart.map();
  return {chart.family(), chart.domain(),
          [m, inner](const BiJet& u, const BiJet& v) { return apply_motion(m, inner(u, v)); },
          chart.params(), chart.name() + "+motion"};
}

SurfaceChart compose(const SpaceMap& map, const SurfaceChart& chart, std::string name) {
  ChartMap inner = chart.map();
  return {Family::Generic, chart.domain(),
          [map, inner](const BiJet& u, const BiJet& v) { return map(inner(u, v)); },
          chart.params(), std::move(name)};
}

std::string to_string(PlaneKind k) {
  return k == PlaneKind::Isotropic ? "isotropic" : "non-isotropic";
}

PlaneKind classify_plane(double a, double b, double c) {
  if (a == 0.0 && b == 0.0 && c == 0.0) throw DomainError("plane with zero normal");
  return c != 0.0 ? PlaneKind::NonIsotropic : PlaneKind::Isotropic;
}

}  // namespace iso3
