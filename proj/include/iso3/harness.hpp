#pragma once

// Grid-based property checks over charts, closed forms, reconstructions and
// witnesses, bundled into named suites with deliberately falsified controls.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iso3/catalog.hpp"
#include "iso3/kernel.hpp"

namespace iso3 {

// nu x nv samples of [u.lo + inset, u.hi - inset] x [v.lo + inset, v.hi - inset].
struct GridSpec {
  Interval u;
  Interval v;
  std::size_t nu = 50;
  std::size_t nv = 50;
  double inset = 1e-3;

  static GridSpec over(const Rect& domain, std::size_t nu = 50, std::size_t nv = 50,
                       double inset = 1e-3);

  double u_at(std::size_t i) const;
  double v_at(std::size_t j) const;
  std::string label() const;  // "50x50"

  // Throws DomainError if nu or nv < 2 or the inset grid leaves `domain`.
  void validate(const Rect& domain) const;
};

// Row-major: index j * nu + i holds (u_at(i), v_at(j)).
struct CurvatureField {
  GridSpec grid;
  std::vector<Curvatures> values;
};

// Throws AdmissibilityError / DomainError naming the failing grid point.
CurvatureField curvature_field(const SurfaceChart& chart, const GridSpec& grid);

struct VerificationReport {
  std::string check;
  std::string family;
  std::string grid;
  std::uint64_t seed = 0;
  double max_dev = 0.0;
  double mean_dev = 0.0;
  std::pair<double, double> worst_point{0.0, 0.0};
  double tol = 0.0;
  bool pass = false;           // max_dev < tol
  bool control = false;        // deliberately falsified case
  std::string metric;

  bool expect_pass() const { return !control; }
  bool as_designed() const { return pass != control; }
};

VerificationReport check_constant(const CurvatureField& field, double target, Curvature which,
                                  double tol);

// Per point, max(|dK|, |dH|) / max(1, |K|, |H|) between chart and m o chart.
VerificationReport check_motion_invariance(const SurfaceChart& chart, const IsotropicMotion& m,
                                           const GridSpec& grid, double tol);

// Same comparison against an arbitrary second chart on the same parameters.
VerificationReport check_same_curvature(const SurfaceChart& chart, const SurfaceChart& other,
                                        const GridSpec& grid, double tol);

// Magnitude of the terms that cancel in K = (ln - m^2)/W and
// H = (En - 2Fm + Gl)/(2W). Rounding error in either is proportional to
// this, not to |K| or |H|; near zero it is what "relative" can mean.
struct CurvatureScale {
  double K = 0.0;
  double H = 0.0;
};
CurvatureScale curvature_scale(const FundamentalForms& ff);

// |closed - kernel| / max(|kernel|, scale, 1e-3): relative agreement, with
// an absolute floor of 1e-3 * tol where both the value and its terms vanish.
double oracle_deviation(double closed, double kernel, double scale);

// Seedable generator with bit-exact doubles on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 gen_;
};

// a, b, c, d, e uniform in [-2, 2], theta uniform in [0, 2 pi).
IsotropicMotion random_motion(Rng& rng);

// Central-difference check of the forward-mode jets.
struct FdOracleResult {
  std::string chart;
  std::vector<double> steps;
  std::vector<double> first_err;   // max relative error of r_u, r_v per step
  std::vector<double> second_err;  // same for r_uu, r_uv, r_vv
  std::vector<double> first_order;   // between consecutive steps
  std::vector<double> second_order;
};

FdOracleResult fd_oracle(const SurfaceChart& chart,
                         const std::vector<std::pair<double, double>>& points,
                         const std::vector<double>& steps = {1e-2, 1e-3, 1e-4});

// Five charts with transcendental profiles (polynomials would make the
// central differences exact).
std::vector<SurfaceChart> fd_test_charts();

struct Tolerances {
  double closed = 1e-8;     // closed-form constancy
  double oracle = 1e-9;     // closed form vs kernel, scaled by term magnitude
  double recon = 1e-6;      // constancy through reconstructed profiles
  double recon_sup = 1e-8;  // reconstruction sup error at the nominal step
  double flat = 1e-12;      // |K| on generalized cylinders
  double motion = 1e-9;     // motion invariance, relative
  double witness = 1e-12;   // vanishing witness quantities
  double witness_floor = 1e-8;
  double fd = 1e-6;         // relative FD error at the finest step
  double fd_order_slack = 0.5;
  double factor_lo = 12.0;  // error ratio window when halving the step
  double factor_hi = 20.0;

  // Sets every tolerance that bounds a deviation (not the windows) to t.
  void override_all(double t);
};

struct HarnessConfig {
  std::size_t grid = 50;
  double inset = 1e-3;
  std::uint64_t seed = 42;
  Tolerances tol;
  std::size_t oracle_points = 100;
  std::size_t motions = 50;
  std::size_t motion_grid = 20;
  std::size_t fd_points = 5;
  double ode_step = 1e-3;
  std::size_t workers = 0;  // 0: hardware concurrency
};

// scherk theorems flatness motions oracles reconstruction witnesses; "all"
// runs every one of them.
std::vector<std::string> suite_ids();

// Reports sorted by check name; identical config gives identical reports.
// Errors inside a check become a failing report carrying the message.
std::vector<VerificationReport> run_suite(std::string_view suite, const HarnessConfig& config);

// True iff every real check passes and every control fails.
bool suite_ok(const std::vector<VerificationReport>& reports);

}  // namespace iso3
