#include "iso3/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

#include "iso3/error.hpp"

namespace iso3 {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::vector<double> samples(const Interval& I, std::size_t n) {
  std::vector<double> out(n);
  const double step = (I.hi - I.lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (i + 1 == n) ? I.hi : I.lo + static_cast<double>(i) * step;
  }
  return out;
}

void require_domain(const Rect& d) {
  if (d.u.empty() || d.v.empty() || !d.u.bounded() || !d.v.bounded()) {
    throw ConstraintError("empty or unbounded chart domain");
  }
}

// Requires J(u, v)^2 > eps_reg on the validation grid, where J is the
// signed top-view area element of the family.
void check_regularity(const Rect& d, const ValidationOptions& o, std::string_view condition,
                      std::string_view names, const std::function<double(double, double)>& J) {
  require_domain(d);
  const auto us = samples(d.u, std::max<std::size_t>(o.grid, 2));
  const auto vs = samples(d.v, std::max<std::size_t>(o.grid, 2));
  for (double v : vs) {
    for (double u : us) {
      const double j = J(u, v);
      if (!(j * j > o.eps_reg)) {
        std::ostringstream os;
        os.precision(17);
        os << "regularity violated: " << condition << " fails at " << names << " = (" << u
           << ", " << v << ")";
        throw RegularityError(os.str());
      }
    }
  }
}

void check_torsion(const Interval& y, const ValidationOptions& o, const ProfileFn& g,
                   const ProfileFn& h) {
  for (double t : samples(y, std::max<std::size_t>(o.grid, 2))) {
    const Taylor3 gt = g.eval(t), ht = h.eval(t);
    const double tn = gt[2] * ht[3] - gt[3] * ht[2];
    if (!(std::abs(tn) > o.torsion_floor)) {
      std::ostringstream os;
      os.precision(17);
      os << "torsion degeneracy: g″h‴ − g‴h″ ≠ 0 fails at y = " << t << " (value " << tn
         << "); the translating curve is not a space curve";
      throw RegularityError(os.str());
    }
  }
}

// ---- profile builders ------------------------------------------------------

ProfileFn monomial(double coef, int n) {
  return {num(coef) + "*t^" + std::to_string(n),
          [coef, n](const Taylor3& t) { return coef * pow(t, n); }};
}

ProfileFn linear(double coef) {
  return {num(coef) + "*t", [coef](const Taylor3& t) { return coef * t; }};
}

// coef * (side * t)^p on side * t >= inset.
ProfileFn fractional(double coef, double p, double side, double inset) {
  Interval dom = side > 0 ? Interval{inset, std::numeric_limits<double>::infinity()}
                          : Interval{-std::numeric_limits<double>::infinity(), -inset};
  return {num(coef) + "*|t|^" + num(p),
          [coef, p, side](const Taylor3& t) { return coef * pow(side * t, p); }, dom};
}

// coef * log|cos(scale t)| on the branch around 0.
ProfileFn log_abs_cos(double coef, double scale, double inset) {
  const double half = kPi / (2.0 * std::abs(scale)) - inset;
  return {num(coef) + "*log|cos(" + num(scale) + "*t)|",
          [coef, scale](const Taylor3& t) { return coef * log(abs(cos(scale * t))); },
          Interval{-half, half}};
}

// coef * log|k t| on side * t >= inset.
ProfileFn log_abs_linear(double coef, double k, double side, double inset) {
  Interval dom = side > 0 ? Interval{inset, std::numeric_limits<double>::infinity()}
                          : Interval{-std::numeric_limits<double>::infinity(), -inset};
  return {num(coef) + "*log|" + num(k) + "*t|",
          [coef, k](const Taylor3& t) { return coef * log(abs(k * t)); }, dom};
}

// z-range [lo, lo + len] (or mirrored) such that side * (a21 x + a22 z) >= vmin
// for every x in xs.
Interval half_plane_z(const AffineFrame& fr, const Interval& xs, double side, double vmin,
                      double len) {
  const double sa21 = side * fr.a21(), sa22 = side * fr.a22();
  if (sa22 == 0.0) throw ConstraintError("frame leaves v independent of z (a22 = 0)");
  const double worst = std::min(sa21 * xs.lo, sa21 * xs.hi);
  const double edge = (vmin - worst) / sa22;
  return sa22 > 0 ? Interval{edge, edge + len} : Interval{edge - len, edge};
}

Rect square(double r) { return {{-r, r}, {-r, r}}; }

Rect scaled(Rect d, double s) {
  d.u.lo *= s;
  d.u.hi *= s;
  d.v.lo *= s;
  d.v.hi *= s;
  if (d.u.lo > d.u.hi) std::swap(d.u.lo, d.u.hi);
  if (d.v.lo > d.v.hi) std::swap(d.v.lo, d.v.hi);
  return d;
}

double sign(double x) { return x < 0 ? -1.0 : 1.0; }

// ---- constants ------------------------------------------------------------

class Constants {
 public:
  Constants(std::string_view id, const Params& given, Params defaults)
      : id_(id), values_(std::move(defaults)) {
    for (const auto& [k, v] : given) {
      if (!values_.count(k)) {
        throw ConstraintError("family " + id_ + ": unknown constant '" + k + "'");
      }
      if (!std::isfinite(v)) throw ConstraintError("family " + id_ + ": non-finite " + k);
      values_[k] = v;
    }
  }

  double operator[](const std::string& k) const { return values_.at(k); }

  double nonzero(const std::string& k) const {
    const double v = values_.at(k);
    if (v == 0.0) throw ConstraintError("family " + id_ + " requires " + k + " ≠ 0");
    return v;
  }

  void require_zero(const std::string& k, std::string_view why) const {
    if (values_.at(k) != 0.0) {
      throw ConstraintError("family " + id_ + " requires " + k + " = 0 (" + std::string(why) +
                            ")");
    }
  }

  AffineFrame frame() const {
    return AffineFrame::make(values_.at("a11"), values_.at("a12"), values_.at("a21"),
                             values_.at("a22"));
  }

  void set(const std::string& k, double v) { values_[k] = v; }
  const Params& values() const { return values_; }

 private:
  std::string id_;
  Params values_;
};

Params frame_defaults(double a11, double a12, double a21, double a22) {
  return {{"a11", a11}, {"a12", a12}, {"a21", a21}, {"a22", a22}};
}

Params merged(Params a, const Params& b) {
  a.insert(b.begin(), b.end());
  return a;
}

FamilySpec base(std::string id, Family family, std::string anchor) {
  FamilySpec s;
  s.id = std::move(id);
  s.family = family;
  s.anchor = std::move(anchor);
  return s;
}

ProfileFn default_space_g() {
  return {"t^3", [](const Taylor3& t) { return pow(t, 3); }};
}

// ---- theorem families -----------------------------------------------------

FamilySpec thm_4_2(const FamilyInputs& in) {
  Constants c("4.2", in.constants,
              merged(frame_defaults(1, 0, 0, 1), {{"c1", 1.0}, {"c2", 1.0}}));
  c.require_zero("a12", "the case a12 ≠ 0 admits no solution");
  const double c1 = c.nonzero("c1"), c2 = c.nonzero("c2");
  const auto fr = c.frame();
  auto s = base("4.2", Family::AffineSecond, "theorem 4.2; constant Gaussian curvature");
  s.frame = fr;
  s.f = monomial(c1, 2);
  s.g = fractional(c2, 2.0 / 3.0, 1.0, kBranchInset);
  const Interval xs{-1, 1};
  s.domain = in.domain.value_or(Rect{xs, half_plane_z(fr, xs, 1.0, 1.0, 1.0)});
  s.expected = Expected{Curvature::K,
                        -9.0 * c1 * fr.a11() * fr.a11() / (4.0 * c2 * c2 * c2 * fr.a22() * fr.a22())};
  s.constants = c.values();
  return s;
}

FamilySpec thm_4_3a(const FamilyInputs& in) {
  Constants c("4.3a", in.constants,
              merged(frame_defaults(1, 0.5, 0.3, 1), {{"c1", 1.0}, {"c2", 1.0}}));
  const auto fr = c.frame();
  if (fr.a12() * c["c1"] + fr.a22() * c["c2"] == 0.0) {
    throw ConstraintError("family 4.3a requires a12·c1 + a22·c2 ≠ 0");
  }
  auto s = base("4.3a", Family::AffineSecond, "theorem 4.3(a); isotropic minimal");
  s.frame = fr;
  s.f = linear(c["c1"]);
  s.g = linear(c["c2"]);
  s.domain = in.domain.value_or(square(1));
  s.expected = Expected{Curvature::H, 0.0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_4_3b(const FamilyInputs& in) {
  Constants c("4.3b", in.constants, merged(frame_defaults(1, 0, 0.3, 1), {{"c1", 1.0}}));
  c.require_zero("a12", "case (b) is the a12 = 0 branch");
  const double c1 = c.nonzero("c1");
  const auto fr = c.frame();
  const double w = fr.omega();
  const double k = c1 * w * w;
  auto s = base("4.3b", Family::AffineSecond, "theorem 4.3(b); isotropic minimal");
  s.frame = fr;
  const double scale = c1 * fr.a22() * w;
  s.f = log_abs_cos(1.0 / k, scale, kBranchInset * std::abs(fr.a11()));
  s.g = log_abs_linear(-1.0 / k, k, 1.0, kBranchInset);
  const double xmax = std::min(1.0, kPi / (2.0 * std::abs(scale * fr.a11())) - kBranchInset);
  const Interval xs{-xmax, xmax};
  s.domain = in.domain.value_or(Rect{xs, half_plane_z(fr, xs, 1.0, 0.5, 1.0)});
  s.expected = Expected{Curvature::H, 0.0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_4_3c(const FamilyInputs& in) {
  Constants c("4.3c", in.constants, merged(frame_defaults(1, 0.5, 0.3, 1), {{"c1", 1.0}}));
  c.nonzero("a12");
  c.nonzero("a22");
  const double c1 = c.nonzero("c1");
  const auto fr = c.frame();
  const double w = fr.omega();
  auto s = base("4.3c", Family::AffineSecond, "theorem 4.3(c); isotropic minimal");
  s.frame = fr;
  s.f = log_abs_cos(1.0 / (c1 * w * w), w * c1 * fr.a22(), kBranchInset);
  s.g = log_abs_cos(-1.0 / (c1 * w * w), w * c1 * fr.a12(), kBranchInset);
  // The top-view Jacobian vanishes on x = 0; stay on one side of it.
  s.domain = in.domain.value_or(scaled(Rect{{0.1, 1.0}, {-0.5, 0.5}}, 1.0 / std::abs(c1)));
  s.expected = Expected{Curvature::H, 0.0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_4_4a(const FamilyInputs& in) {
  Constants c("4.4a", in.constants,
              merged(frame_defaults(1, 1, 1, 0), {{"c1", 1.0}, {"H0", 1.0}}));
  c.require_zero("a22", "case (a) is the a22 = 0 branch");
  const double c1 = c.nonzero("c1"), H0 = c.nonzero("H0");
  const auto fr = c.frame();
  auto s = base("4.4a", Family::AffineSecond, "theorem 4.4(a); constant mean curvature");
  s.frame = fr;
  s.f = linear(c1);
  s.g = monomial(-H0 * fr.a12() * c1 / (fr.a21() * fr.a21()), 2);
  s.domain = in.domain.value_or(square(1));
  s.expected = Expected{Curvature::H, H0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_4_4b(const FamilyInputs& in) {
  Constants c("4.4b", in.constants,
              merged(frame_defaults(1, 0.5, 0, 1),
                     {{"c1", 1.0}, {"H0", 1.0}, {"c2", std::nan("")}, {"c3", std::nan("")}}));
  const double a12 = c.nonzero("a12"), a22 = c.nonzero("a22");
  const double c1 = c.nonzero("c1"), H0 = c.nonzero("H0");
  const auto fr = c.frame();
  const double w = fr.omega();
  const double S = a22 * a22 + w * c1 * w * c1;
  const double sigma = 4.0 * H0 * a22 / S;
  const double side = sign(sigma);
  const double c2 = S / (2.0 * H0 * a22 * a22) * std::sqrt(std::abs(sigma));
  const double c3 = -a12 * c1 / a22;
  auto near = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); };
  if (!std::isnan(c["c3"]) && !near(c["c3"], c3)) {
    throw ConstraintError("family 4.4b requires c3 = −a12·c1/a22 = " + num(c3));
  }
  if (!std::isnan(c["c2"]) && !near(c["c2"], c2)) {
    throw ConstraintError("family 4.4b requires c2 = S/(2·H0·a22²)·√|4·H0·a22/S| = " + num(c2));
  }
  c.set("c2", c2);
  c.set("c3", c3);
  auto s = base("4.4b", Family::AffineSecond, "theorem 4.4(b); constant mean curvature");
  s.frame = fr;
  s.f = linear(c1);
  s.g = {"c2*|v|^(1/2) + c3*v",
         [c2, c3, side](const Taylor3& t) { return c2 * sqrt(side * t) + c3 * t; },
         side > 0 ? Interval{kBranchInset, std::numeric_limits<double>::infinity()}
                  : Interval{-std::numeric_limits<double>::infinity(), -kBranchInset}};
  const Interval xs{-1, 1};
  s.domain = in.domain.value_or(Rect{xs, half_plane_z(fr, xs, side, 0.5, 1.5)});
  s.expected = Expected{Curvature::H, H0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_5_3a(const FamilyInputs& in) {
  Constants c("5.3a", in.constants, {{"a", 0.0}, {"c1", 1.0}, {"H0", 1.0}});
  const double a = c["a"], c1 = c["c1"], H0 = c.nonzero("H0");
  auto s = base("5.3a", Family::TypeII, "theorem 5.3(a); constant mean curvature");
  s.a = a;
  s.f = linear(c1);
  s.g = in.g.value_or(default_space_g());
  const ProfileFn g = s.g;
  const double k = H0 / (1.0 + a * a);
  s.h = {"H0/(1+a^2)*(g-a*t)^2 + c1*t",
         [g, k, a, c1](const Taylor3& t) {
           const Taylor3 w = g(t) - a * t;
           return k * w * w + c1 * t;
         },
         g.domain()};
  s.domain = in.domain.value_or(Rect{{-1, 1}, {0.5, 1.5}});
  s.expected = Expected{Curvature::H, H0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_5_3b(const FamilyInputs& in) {
  Constants c("5.3b", in.constants, {{"a", 0.0}, {"c1", 1.0}, {"c2", 1.0}, {"H0", 1.0}});
  c.require_zero("a", "closed-form translating curve available for a = 0 only");
  const double c1 = c.nonzero("c1"), k = c.nonzero("c2"), H0 = c.nonzero("H0");
  auto s = base("5.3b", Family::TypeII, "theorem 5.3(b); constant mean curvature");
  s.a = 0.0;
  s.f = {"c1*exp(c2*t)", [c1, k](const Taylor3& t) { return c1 * exp(k * t); }};
  const double side = sign(k);
  const Interval gdom = side > 0 ? Interval{kBranchInset / std::abs(k), std::numeric_limits<double>::infinity()}
                                 : Interval{-std::numeric_limits<double>::infinity(), -kBranchInset / std::abs(k)};
  // Solves (1 + g'^2) g' c2 = -g'' with g' > 0.
  s.g = {"atan(sqrt(exp(2*c2*t) - 1))/c2",
         [k](const Taylor3& t) { return atan(sqrt(exp(2.0 * k * t) - 1.0)) / k; }, gdom};
  const ProfileFn g = s.g;
  s.h = {"H0*g^2", [g, H0](const Taylor3& t) { const Taylor3 w = g(t); return H0 * w * w; },
         gdom};
  Interval ys{0.25 / std::abs(k), 1.5 / std::abs(k)};
  if (side < 0) ys = {-ys.hi, -ys.lo};
  s.domain = in.domain.value_or(Rect{{-1, 1}, ys});
  s.expected = Expected{Curvature::H, H0};
  s.constants = c.values();
  return s;
}

FamilySpec thm_6_3(const FamilyInputs& in) {
  Constants c("6.3", in.constants, {{"a", 0.0}, {"d1", 0.0}, {"H0", 1.0}});
  const double a = c["a"], d1 = c["d1"], H0 = c.nonzero("H0");
  auto s = base("6.3", Family::TypeIII, "theorem 6.3; constant mean curvature");
  s.a = a;
  s.f = linear(d1);
  s.g = in.g.value_or(default_space_g());
  const ProfileFn g = s.g;
  const double k = H0 / (1.0 + d1 * d1);
  s.h = {"H0/(1+d1^2)*(g-d1*t)^2 + a*t",
         [g, k, d1, a](const Taylor3& t) {
           const Taylor3 w = g(t) - d1 * t;
           return k * w * w + a * t;
         },
         g.domain()};
  s.domain = in.domain.value_or(Rect{{-1, 1}, {0.5, 1.5}});
  s.expected = Expected{Curvature::H, H0};
  s.constants = c.values();
  return s;
}

FamilySpec scherk(int member, const FamilyInputs& in) {
  const std::string id = "scherk-" + std::to_string(member);
  const std::string anchor = "isotropic Scherk family, member " + std::to_string(member);
  FamilySpec s;
  switch (member) {
    case 1: {
      Constants c(id, in.constants, {{"c", 1.0}});
      const double k = c.nonzero("c");
      s = base(id, Family::I1, anchor);
      s.f = monomial(k, 2);
      s.g = monomial(-k, 2);
      s.domain = in.domain.value_or(square(1));
      s.constants = c.values();
      break;
    }
    case 2: {
      Constants c(id, in.constants, {{"c", 1.0}});
      const double k = c.nonzero("c");
      s = base(id, Family::I2, anchor);
      s.f = log_abs_cos(-1.0 / k, k, kBranchInset);
      s.g = log_abs_linear(1.0 / k, k, sign(k), kBranchInset);
      const double half = s.f.domain().hi;
      Interval zs{kBranchInset, kBranchInset + 1.0 / std::abs(k)};
      if (k < 0) zs = {-zs.hi, -zs.lo};
      s.domain = in.domain.value_or(Rect{{-half, half}, zs});
      s.constants = c.values();
      break;
    }
    case 3: {
      Constants c(id, in.constants, {{"c", 1.0}});
      const double k = c.nonzero("c");
      s = base(id, Family::I3, anchor);
      s.f = log_abs_cos(-1.0 / k, k, kBranchInset);
      s.g = log_abs_cos(1.0 / k, k, kBranchInset);
      const double half = s.f.domain().hi;
      // Non-admissible on the diagonal y = z.
      const double gap = 0.1 / std::abs(k);
      s.domain = in.domain.value_or(Rect{{gap, half}, {-half, -gap}});
      s.constants = c.values();
      break;
    }
    case 4: {
      Constants c(id, in.constants, merged(frame_defaults(1, 0.5, -0.3, 1.2), {{"c", 1.0}}));
      const double k = c.nonzero("c");
      const auto fr = c.frame();
      s = base(id, Family::AffineFirst, anchor);
      s.frame = fr;
      const double ratio = (fr.a11() * fr.a11() + fr.a12() * fr.a12()) /
                           (fr.a21() * fr.a21() + fr.a22() * fr.a22());
      s.f = monomial(k, 2);
      s.g = monomial(-k * ratio, 2);
      s.domain = in.domain.value_or(square(1));
      s.constants = c.values();
      break;
    }
    case 5: {
      Constants c(id, in.constants, merged(frame_defaults(1.5, 0, 0, 1), {{"c", 1.0}}));
      c.require_zero("a12", "the first translating curve lies in an isotropic plane");
      const double k = c.nonzero("c");
      const auto fr = c.frame();
      s = base(id, Family::AffineSecond, anchor);
      s.frame = fr;
      // cos(c x) with u = a11 x.
      s.f = log_abs_cos(1.0 / k, k / fr.a11(), kBranchInset * std::abs(fr.a11()));
      s.g = log_abs_linear(-1.0 / k, k, sign(k), kBranchInset);
      const double half = kPi / (2.0 * std::abs(k)) - kBranchInset;
      const Interval xs{-half, half};
      s.domain =
          in.domain.value_or(Rect{xs, half_plane_z(fr, xs, sign(k), kBranchInset, 1.0 / std::abs(k))});
      s.constants = c.values();
      break;
    }
    case 6: {
      Constants c(id, in.constants, merged(frame_defaults(1, 0.5, 0.3, 1), {{"c", 1.0}}));
      c.nonzero("a12");
      c.nonzero("a22");
      const double k = c.nonzero("c");
      const auto fr = c.frame();
      const double w = fr.omega();
      s = base(id, Family::AffineSecond, anchor);
      s.frame = fr;
      s.f = log_abs_cos(1.0 / k, k * fr.a22() / w, kBranchInset);
      s.g = log_abs_cos(-1.0 / k, k * fr.a12() / w, kBranchInset);
      s.domain = in.domain.value_or(scaled(Rect{{0.1, 1.0}, {-0.5, 0.5}}, 1.0 / std::abs(k)));
      s.constants = c.values();
      break;
    }
    default:
      throw ConstraintError("unknown Scherk member " + id);
  }
  s.expected = Expected{Curvature::H, 0.0};
  return s;
}

// ---- base constructors ----------------------------------------------------

FamilySpec constructor_family(std::string_view id, const FamilyInputs& in) {
  FamilySpec s;
  s.id = std::string(id);
  if (id == "orthogonal") {
    Constants c(id, in.constants, {});
    const OrthoKind kind = in.kind.value_or(OrthoKind::I1);
    s.family = kind == OrthoKind::I1 ? Family::I1 : kind == OrthoKind::I2 ? Family::I2 : Family::I3;
    s.anchor = "orthogonal translation surfaces of type I.1*, I.2*, I.3*";
    s.f = in.f.value_or(ProfileFn::zero());
    s.g = in.g.value_or(kind == OrthoKind::I2 ? ProfileFn::affine(1.0) : ProfileFn::zero());
    s.domain = in.domain.value_or(square(1));
  } else if (id == "affine-first") {
    Constants c(id, in.constants, frame_defaults(1, 0, 0, 1));
    s.family = Family::AffineFirst;
    s.anchor = "affine translation surface of the first kind";
    s.frame = c.frame();
    s.f = in.f.value_or(ProfileFn::zero());
    s.g = in.g.value_or(ProfileFn::zero());
    s.domain = in.domain.value_or(square(1));
    s.constants = c.values();
  } else if (id == "affine-second") {
    Constants c(id, in.constants, frame_defaults(1, 0, 0, 1));
    s.family = Family::AffineSecond;
    s.anchor = "affine translation surface of the second kind";
    s.frame = c.frame();
    s.f = in.f.value_or(ProfileFn::zero());
    s.g = in.g.value_or(ProfileFn::affine(1.0));
    s.domain = in.domain.value_or(square(1));
    s.constants = c.values();
  } else if (id == "type-II" || id == "type-III") {
    Constants c(id, in.constants, {{"a", 0.0}});
    s.family = id == "type-II" ? Family::TypeII : Family::TypeIII;
    s.anchor = id == "type-II" ? "type II translation surface"
                               : "type III translation surface";
    s.a = c["a"];
    s.f = in.f.value_or(ProfileFn::zero());
    s.g = in.g.value_or(default_space_g());
    s.h = in.h.value_or(ProfileFn{"t^2", [](const Taylor3& t) { return pow(t, 2); }});
    s.domain = in.domain.value_or(Rect{{-1, 1}, {0.5, 1.5}});
    s.constants = c.values();
  } else {
    throw ConstraintError("unknown family id '" + std::string(id) + "'");
  }
  return s;
}

const std::vector<std::string> kConstructorIds = {"orthogonal", "affine-first", "affine-second",
                                                  "type-II", "type-III"};
const std::vector<std::string> kTheoremIds = {"4.2",  "4.3a", "4.3b", "4.3c", "4.4a",
                                              "4.4b", "5.3a", "5.3b", "6.3"};
const std::vector<std::string> kScherkIds = {"scherk-1", "scherk-2", "scherk-3",
                                             "scherk-4", "scherk-5", "scherk-6"};

}  // namespace

std::string to_string(Curvature c) { return c == Curvature::K ? "K" : "H"; }

AffineFrame AffineFrame::make(double a11, double a12, double a21, double a22) {
  AffineFrame f(a11, a12, a21, a22);
  if (f.omega_ == 0.0 || !std::isfinite(f.omega_)) {
    throw ConstraintError("affine frame is singular: ω = a11·a22 − a12·a21 = 0");
  }
  return f;
}

SurfaceChart make_orthogonal_type(OrthoKind kind, const ProfileFn& f, const ProfileFn& g,
                                  const Rect& domain, const ValidationOptions& opts) {
  switch (kind) {
    case OrthoKind::I1:
      check_regularity(domain, opts, "graph", "(x, y)", [&](double x, double y) {
        f.eval(x);
        g.eval(y);
        return 1.0;
      });
      return {Family::I1, domain, [f, g](const BiJet& x, const BiJet& y) {
                return Triple<BiJet>{x, y, f(x) + g(y)};
              }};
    case OrthoKind::I2:
      check_regularity(domain, opts, "g′ ≠ 0", "(x, z)", [&](double x, double z) {
        f.eval(x);
        return g.eval(z)[1];
      });
      return {Family::I2, domain, [f, g](const BiJet& x, const BiJet& z) {
                return Triple<BiJet>{x, f(x) + g(z), z};
              }};
    case OrthoKind::I3:
      check_regularity(domain, opts, "f′ + g′ ≠ 0", "(y, z)", [&](double y, double z) {
        return -(f.eval(y)[1] + g.eval(z)[1]) / 4.0;
      });
      return {Family::I3, domain, [f, g](const BiJet& y, const BiJet& z) {
                return Triple<BiJet>{0.5 * (f(y) + g(z)), 0.5 * (y - z + kPi), 0.5 * (y + z)};
              }};
  }
  throw ConstraintError("unknown orthogonal kind");
}

SurfaceChart make_affine_first(const AffineFrame& fr, const ProfileFn& f, const ProfileFn& g,
                               const Rect& domain, const ValidationOptions& opts) {
  check_regularity(domain, opts, "graph", "(x, y)", [&](double x, double y) {
    f.eval(fr.u(x, y));
    g.eval(fr.v(x, y));
    return 1.0;
  });
  return {Family::AffineFirst, domain,
          [fr, f, g](const BiJet& x, const BiJet& y) {
            return Triple<BiJet>{x, y, f(fr.u(x, y)) + g(fr.v(x, y))};
          },
          frame_defaults(fr.a11(), fr.a12(), fr.a21(), fr.a22())};
}

SurfaceChart make_affine_second(const AffineFrame& fr, const ProfileFn& f, const ProfileFn& g,
                                const Rect& domain, const ValidationOptions& opts) {
  check_regularity(domain, opts, "a12·f′ + a22·g′ ≠ 0", "(x, z)", [&](double x, double z) {
    return fr.a12() * f.eval(fr.u(x, z))[1] + fr.a22() * g.eval(fr.v(x, z))[1];
  });
  return {Family::AffineSecond, domain,
          [fr, f, g](const BiJet& x, const BiJet& z) {
            return Triple<BiJet>{x, f(fr.u(x, z)) + g(fr.v(x, z)), z};
          },
          frame_defaults(fr.a11(), fr.a12(), fr.a21(), fr.a22())};
}

SurfaceChart make_type_II(double a, const ProfileFn& f, const ProfileFn& g, const ProfileFn& h,
                          const Rect& domain, const ValidationOptions& opts) {
  check_regularity(domain, opts, "g′ − a ≠ 0", "(x, y)", [&](double x, double y) {
    f.eval(x);
    h.eval(y);
    return g.eval(y)[1] - a;
  });
  check_torsion(domain.v, opts, g, h);
  return {Family::TypeII, domain,
          [a, f, g, h](const BiJet& x, const BiJet& y) {
            return Triple<BiJet>{x + y, a * x + g(y), f(x) + h(y)};
          },
          {{"a", a}}};
}

SurfaceChart make_type_III(double a, const ProfileFn& f, const ProfileFn& g, const ProfileFn& h,
                           const Rect& domain, const ValidationOptions& opts) {
  check_regularity(domain, opts, "g′ − f′ ≠ 0", "(x, y)", [&](double x, double y) {
    h.eval(y);
    return g.eval(y)[1] - f.eval(x)[1];
  });
  check_torsion(domain.v, opts, g, h);
  return {Family::TypeIII, domain,
          [a, f, g, h](const BiJet& x, const BiJet& y) {
            return Triple<BiJet>{x + y, f(x) + g(y), a * x + h(y)};
          },
          {{"a", a}}};
}

SurfaceChart make_chart(const FamilySpec& s, const ValidationOptions& opts) {
  auto named = [&](SurfaceChart c) {
    Params p = c.params();
    p.insert(s.constants.begin(), s.constants.end());
    return SurfaceChart(c.family(), c.domain(), c.map(), p, s.id);
  };
  switch (s.family) {
    case Family::I1: return named(make_orthogonal_type(OrthoKind::I1, s.f, s.g, s.domain, opts));
    case Family::I2: return named(make_orthogonal_type(OrthoKind::I2, s.f, s.g, s.domain, opts));
    case Family::I3: return named(make_orthogonal_type(OrthoKind::I3, s.f, s.g, s.domain, opts));
    case Family::AffineFirst:
      return named(make_affine_first(s.frame.value_or(AffineFrame::identity()), s.f, s.g,
                                     s.domain, opts));
    case Family::AffineSecond:
      return named(make_affine_second(s.frame.value_or(AffineFrame::identity()), s.f, s.g,
                                      s.domain, opts));
    case Family::TypeII: return named(make_type_II(s.a, s.f, s.g, s.h, s.domain, opts));
    case Family::TypeIII: return named(make_type_III(s.a, s.f, s.g, s.h, s.domain, opts));
    case Family::Generic: break;
  }
  throw ConstraintError("family spec '" + s.id + "' has no constructor");
}

bool has_closed_form(const FamilySpec& s) {
  return s.family == Family::AffineSecond || s.family == Family::I2 ||
         s.family == Family::TypeII || s.family == Family::TypeIII;
}

namespace {

struct Derivs {
  double f1, f2, g1, g2, h1, h2;
};

void require_regular(double q, std::string_view condition, double u, double v) {
  if (!(q * q > kEpsReg)) {
    std::ostringstream os;
    os.precision(17);
    os << "regularity violated: " << condition << " fails at (" << u << ", " << v << ")";
    throw RegularityError(os.str());
  }
}

}  // namespace

double closed_form_K(const FamilySpec& s, double u, double v) {
  switch (s.family) {
    case Family::I2:
    case Family::AffineSecond: {
      const AffineFrame fr = s.frame.value_or(AffineFrame::identity());
      const Taylor3 F = s.f.eval(fr.u(u, v)), G = s.g.eval(fr.v(u, v));
      const double q = fr.a12() * F[1] + fr.a22() * G[1];
      require_regular(q, "a12·f′ + a22·g′ ≠ 0", u, v);
      const double w = fr.omega();
      return w * w * F[2] * G[2] / (q * q * q * q);
    }
    case Family::TypeII: {
      const Taylor3 F = s.f.eval(u), G = s.g.eval(v), Hh = s.h.eval(v);
      const double q = G[1] - s.a;
      require_regular(q, "g′ − a ≠ 0", u, v);
      return F[2] * (Hh[2] * q - G[2] * (Hh[1] - F[1])) / (q * q * q);
    }
    case Family::TypeIII: {
      const Taylor3 F = s.f.eval(u), G = s.g.eval(v), Hh = s.h.eval(v);
      const double q = G[1] - F[1];
      require_regular(q, "g′ − f′ ≠ 0", u, v);
      const double ha = Hh[1] - s.a;
      return -F[2] * ha * (Hh[2] * q - G[2] * ha) / (q * q * q * q);
    }
    default:
      throw ConstraintError("no closed-form curvature for family " + to_string(s.family));
  }
}

double closed_form_H(const FamilySpec& s, double u, double v) {
  switch (s.family) {
    case Family::I2:
    case Family::AffineSecond: {
      const AffineFrame fr = s.frame.value_or(AffineFrame::identity());
      const Taylor3 F = s.f.eval(fr.u(u, v)), G = s.g.eval(fr.v(u, v));
      const double q = fr.a12() * F[1] + fr.a22() * G[1];
      require_regular(q, "a12·f′ + a22·g′ ≠ 0", u, v);
      const double w = fr.omega();
      const double wg = w * G[1], wf = w * F[1];
      return -((fr.a12() * fr.a12() + wg * wg) * F[2] + (fr.a22() * fr.a22() + wf * wf) * G[2]) /
             (2.0 * q * q * q);
    }
    case Family::TypeII: {
      const Taylor3 F = s.f.eval(u), G = s.g.eval(v), Hh = s.h.eval(v);
      const double q = G[1] - s.a;
      require_regular(q, "g′ − a ≠ 0", u, v);
      const double num = (1.0 + G[1] * G[1]) * q * F[2] +
                         (1.0 + s.a * s.a) * (Hh[2] * q - G[2] * (Hh[1] - F[1]));
      return num / (2.0 * q * q * q);
    }
    case Family::TypeIII: {
      const Taylor3 F = s.f.eval(u), G = s.g.eval(v), Hh = s.h.eval(v);
      const double q = G[1] - F[1];
      require_regular(q, "g′ − f′ ≠ 0", u, v);
      const double ha = Hh[1] - s.a;
      const double num =
          (1.0 + F[1] * F[1]) * (Hh[2] * q - G[2] * ha) - (1.0 + G[1] * G[1]) * ha * F[2];
      return num / (2.0 * q * q * q);
    }
    default:
      throw ConstraintError("no closed-form curvature for family " + to_string(s.family));
  }
}

FamilySpec theorem_family(std::string_view id, const FamilyInputs& in) {
  if (id == "4.2") return thm_4_2(in);
  if (id == "4.3a") return thm_4_3a(in);
  if (id == "4.3b") return thm_4_3b(in);
  if (id == "4.3c") return thm_4_3c(in);
  if (id == "4.4a") return thm_4_4a(in);
  if (id == "4.4b") return thm_4_4b(in);
  if (id == "5.3a") return thm_5_3a(in);
  if (id == "5.3b") return thm_5_3b(in);
  if (id == "6.3") return thm_6_3(in);
  for (int k = 1; k <= 6; ++k) {
    if (id == kScherkIds[static_cast<std::size_t>(k - 1)]) return scherk(k, in);
  }
  throw ConstraintError("unknown theorem family '" + std::string(id) + "'");
}

FamilySpec family_spec(std::string_view id, const FamilyInputs& in) {
  if (std::find(kConstructorIds.begin(), kConstructorIds.end(), id) != kConstructorIds.end()) {
    return constructor_family(id, in);
  }
  return theorem_family(id, in);
}

std::vector<std::string> theorem_ids() { return kTheoremIds; }
std::vector<std::string> scherk_ids() { return kScherkIds; }

namespace {

struct DescriptorText {
  std::string id, kind, parameters, summary;
  std::vector<std::string> constraints, suppressed;
};

std::vector<DescriptorText> descriptor_texts() {
  return {
      {"orthogonal", "constructor", "(x,y) | (x,z) | (y,z)",
       "Translation surface with both curves in orthogonal planes (kind I1*, I2*, I3*).",
       {"I2*: g′ ≠ 0", "I3*: f′ + g′ ≠ 0"}, {}},
      {"affine-first", "constructor", "(x,y)", "Graph z = f(a11 x + a12 y) + g(a21 x + a22 y).",
       {"ω = a11·a22 − a12·a21 ≠ 0"}, {}},
      {"affine-second", "constructor", "(x,z)",
       "Surface y = f(u) + g(v) with u = a11 x + a12 z, v = a21 x + a22 z.",
       {"ω ≠ 0", "a12·f′ + a22·g′ ≠ 0"}, {}},
      {"type-II", "constructor", "(x,y)",
       "r = (x + y, a x + g(y), f(x) + h(y)); isotropic planar curve translated along a space curve.",
       {"g′ − a ≠ 0", "g″h‴ − g‴h″ ≠ 0"}, {}},
      {"type-III", "constructor", "(x,y)",
       "r = (x + y, f(x) + g(y), a x + h(y)); non-isotropic planar curve translated along a space curve.",
       {"g′ − f′ ≠ 0", "g″h‴ − g‴h″ ≠ 0"}, {}},
      {"4.2", "theorem", "(x,z)", "Constant K0 ≠ 0: f(u) = c1 u², g(v) = c2 v^(2/3).",
       {"a12 = 0", "c1, c2 ≠ 0", "v > 0 on the domain", "K0 = −9·c1·a11²/(4·c2³·a22²)"},
       {"d2 = d3 = 0 (translations)"}},
      {"4.3a", "theorem", "(x,z)", "Isotropic minimal: non-isotropic plane f = c1 u, g = c2 v.",
       {"a12·c1 + a22·c2 ≠ 0"}, {}},
      {"4.3b", "theorem", "(x,z)",
       "Isotropic minimal, a12 = 0: f = (1/k) log|cos(c1 a22 ω u)|, g = −(1/k) log|k v|, k = c1 ω².",
       {"a12 = 0", "c1 ≠ 0", "branch |c1 a22 ω u| < π/2", "v > 0"},
       {"d2, d3, d4, d5 = 0"}},
      {"4.3c", "theorem", "(x,z)",
       "Isotropic minimal: f = (1/(c1ω²)) log|cos(ω c1 a22 u)|, g = −(1/(c1ω²)) log|cos(ω c1 a12 v)|.",
       {"a12, a22 ≠ 0", "c1 ≠ 0", "x ≠ 0 (top-view Jacobian vanishes on x = 0)"},
       {"c2 = c3 = d4 = d5 = 0 (phases and translations)"}},
      {"4.4a", "theorem", "(x,z)", "Constant H0 ≠ 0, a22 = 0: f = c1 u, g = −(H0 a12 c1/a21²) v².",
       {"a22 = 0", "c1, H0 ≠ 0"}, {"d2 = d3 = 0"}},
      {"4.4b", "theorem", "(x,z)", "Constant H0 ≠ 0: f = c1 u, g = c2 v^(1/2) + c3 v.",
       {"a12, a22 ≠ 0", "c3 = −a12·c1/a22", "c2 = S/(2·H0·a22²)·√|4·H0·a22/S|, S = a22² + (ω c1)²",
        "4·H0·a22·v/S > 0"},
       {"d4 = d5 = 0"}},
      {"5.3a", "theorem", "(x,y)",
       "Constant H0 ≠ 0, generalised cylinder: f = c1 x, h = H0/(1+a²)·(g − a y)² + c1 y.",
       {"H0 ≠ 0", "g non-linear", "g′ − a ≠ 0", "g″h‴ − g‴h″ ≠ 0"}, {"d3 = 0"}},
      {"5.3b", "theorem", "(x,y)",
       "Constant H0 ≠ 0: f = c1 exp(c2 x), h = H0 g², (1 + g′²) g′ c2 = −g″ (a = 0).",
       {"a = 0 (closed form)", "c1, c2, H0 ≠ 0", "c2·y > 0"}, {"d1 = d3 = d4 = 0"}},
      {"6.3", "theorem", "(x,y)",
       "Constant H0 ≠ 0, generalised cylinder: f = d1 x, h = H0/(1+d1²)·(g − d1 y)² + a y.",
       {"H0 ≠ 0", "g non-linear", "g′ − d1 ≠ 0", "g″h‴ − g‴h″ ≠ 0"}, {"d3 = d4 = 0"}},
      {"scherk-1", "scherk", "(x,y)", "z = c (x² − y²).", {"c ≠ 0"}, {}},
      {"scherk-2", "scherk", "(x,z)", "y = (1/c) log|c z / cos(c x)|.",
       {"c ≠ 0", "|c x| < π/2", "c z > 0"}, {}},
      {"scherk-3", "scherk", "(y,z)", "r = ½((1/c) log|cos(c z)/cos(c y)|, y − z + π, y + z).",
       {"c ≠ 0", "|c y|, |c z| < π/2", "y ≠ z"}, {}},
      {"scherk-4", "scherk", "(x,y)",
       "z = c[(a11 x + a12 y)² − (a11² + a12²)/(a21² + a22²)·(a21 x + a22 y)²].", {"c ≠ 0", "ω ≠ 0"},
       {}},
      {"scherk-5", "scherk", "(x,z)", "y = (1/c) log|cos(c x)/(c (a21 x + a22 z))|.",
       {"a12 = 0", "c ≠ 0", "|c x| < π/2", "c·v > 0"}, {}},
      {"scherk-6", "scherk", "(x,z)",
       "y = (1/c) log|cos(c a22 u/ω)/cos(c a12 v/ω)|.", {"a12, a22, c ≠ 0", "x ≠ 0"}, {}},
  };
}

std::vector<FamilyDescriptor> build_catalog() {
  std::vector<FamilyDescriptor> out;
  for (const auto& t : descriptor_texts()) {
    const FamilySpec s = family_spec(t.id);
    FamilyDescriptor d;
    d.id = t.id;
    d.kind = t.kind;
    d.family = s.family;
    d.parameters = t.parameters;
    d.anchor = s.anchor;
    d.summary = t.summary;
    d.constraints = t.constraints;
    d.suppressed = t.suppressed;
    d.defaults = s.constants;
    d.domain = s.domain;
    d.expected = s.expected;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

const std::vector<FamilyDescriptor>& list_catalog() {
  static const std::vector<FamilyDescriptor> catalog = build_catalog();
  return catalog;
}

const FamilyDescriptor& describe_family(std::string_view id) {
  for (const auto& d : list_catalog()) {
    if (d.id == id) return d;
  }
  throw ConstraintError("unknown family id '" + std::string(id) + "'");
}

}  // namespace iso3
