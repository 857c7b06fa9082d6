#pragma once

// Differential geometry of admissible surfaces in the affine model of the
// simply isotropic space: the induced (top-view) metric, the second form
// relative to the isotropic direction (0, 0, 1), and the six-parameter
// motion group.

#include <array>
#include <functional>
#include <map>
#include <string>

#include "iso3/profile.hpp"
#include "iso3/taylor.hpp"

namespace iso3 {

template <class T>
using Triple = std::array<T, 3>;
using Vec3 = Triple<double>;

inline constexpr double kEpsReg = 1e-10;   // admissibility threshold on W
inline constexpr double kEpsUnit = 1e-8;   // unit-speed tolerance for curves

struct Rect {
  Interval u;
  Interval v;
  bool contains(double pu, double pv) const { return u.contains(pu) && v.contains(pv); }
};

// Value and partials up to order two of a parametric surface at a point.
// The mixed partial is stored once.
struct Jet2 {
  Vec3 value{};
  Vec3 du{};
  Vec3 dv{};
  Vec3 duu{};
  Vec3 duv{};
  Vec3 dvv{};

  // Throws DomainError if any component is NaN/Inf.
  static Jet2 from(const Triple<BiJet>& r);
};

// Derivatives of a space curve up to order three.
struct CurveJet3 {
  Vec3 value{};
  Vec3 d1{};
  Vec3 d2{};
  Vec3 d3{};

  static CurveJet3 from(const Triple<Taylor3>& c);
};

struct FundamentalForms {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double l = 0.0;
  double m = 0.0;
  double n = 0.0;
  double W = 0.0;  // E*G - F*F
};

struct IsotropicMotion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double theta = 0.0;
};

enum class Family { Generic, I1, I2, I3, AffineFirst, AffineSecond, TypeII, TypeIII };

std::string to_string(Family f);

using Params = std::map<std::string, double>;
using ChartMap = std::function<Triple<BiJet>(const BiJet&, const BiJet&)>;

// A parametric map (u, v) -> (x, y, z) on a rectangle of parameter space.
class SurfaceChart {
 public:
  SurfaceChart(Family family, Rect domain, ChartMap map, Params params = {},
               std::string name = {});

  Family family() const { return family_; }
  const Rect& domain() const { return domain_; }
  const Params& params() const { return params_; }
  const std::string& name() const { return name_; }
  const ChartMap& map() const { return map_; }

  Jet2 jet(double u, double v) const;
  Vec3 point(double u, double v) const;

  SurfaceChart with_domain(Rect d) const { return {family_, d, map_, params_, name_}; }

 private:
  Family family_;
  Rect domain_;
  ChartMap map_;
  Params params_;
  std::string name_;
};

Jet2 eval_jet2(const SurfaceChart& chart, double u, double v);

// l, m, n use the area element sqrt(W) signed by the orientation of the top
// view, x_u y_v - x_v y_u, so that H is invariant under reparameterisation.
// Throws AdmissibilityError if W <= eps_reg.
FundamentalForms fundamental_forms(const Jet2& jet, double eps_reg = kEpsReg);

double gauss_curvature(const FundamentalForms& ff);
double mean_curvature(const FundamentalForms& ff);

struct Curvatures {
  double K = 0.0;
  double H = 0.0;
  double W = 0.0;
};
Curvatures curvatures_at(const SurfaceChart& chart, double u, double v);

// sqrt(x''^2 + y''^2); requires |x'^2 + y'^2 - 1| < eps_unit.
double curve_curvature(const CurveJet3& jet, double eps_unit = kEpsUnit);
// x'y'' - x''y', same unit-speed requirement.
double curve_curvature_signed(const CurveJet3& jet, double eps_unit = kEpsUnit);
// det(c', c'', c''').
double curve_torsion_numerator(const CurveJet3& jet);

template <class T>
Triple<T> apply_motion(const IsotropicMotion& m, const Triple<T>& p) {
  const double ct = std::cos(m.theta), st = std::sin(m.theta);
  return {m.a + p[0] * ct - p[1] * st, m.b + p[0] * st + p[1] * ct,
          m.c + m.d * p[0] + m.e * p[1] + p[2]};
}

// m o chart, same parameters and domain.
SurfaceChart compose(const IsotropicMotion& m, const SurfaceChart& chart);

// Pointwise map applied after the chart; used for maps outside the group.
using SpaceMap = std::function<Triple<BiJet>(const Triple<BiJet>&)>;
SurfaceChart compose(const SpaceMap& map, const SurfaceChart& chart, std::string name);

enum class PlaneKind { Isotropic, NonIsotropic };
std::string to_string(PlaneKind k);

// Plane a x + b y + c z = d. Throws DomainError for a zero normal.
PlaneKind classify_plane(double a, double b, double c);

}  // namespace iso3
