#pragma once

// Classical fourth-order Runge-Kutta integration of the first-order systems
// that arise in the classification proofs, reconstruction of the closed-form
// profiles from them, and numerical witnesses for the nonexistence results.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iso3/catalog.hpp"
#include "iso3/profile.hpp"
#include "iso3/taylor.hpp"

namespace iso3 {

// The right-hand side is written once on Taylor3 so that the same closure
// drives stepping (constant jets) and the Taylor recursion that recovers
// higher derivatives of the solution at a point.
using OdeState = std::vector<Taylor3>;
using OdeRhs = std::function<OdeState(const Taylor3& t, const OdeState& y)>;

struct OdeSpec {
  std::string id;
  OdeRhs rhs;
  std::vector<double> y0;
  double t0 = 0.0;
  double t1 = 1.0;
  double step = 1e-3;
  double blowup = 1e12;
  std::size_t max_steps = 10'000'000;
};

struct OdeSolution {
  std::vector<double> t;                // uniform, t.front() == t0, t.back() == t1
  std::vector<std::vector<double>> y;   // y[i] is the state at t[i]
  double step = 0.0;                    // actual step (t1 - t0) / n
};

// Throws IntegrationError on an invalid spec, a state component above the
// blow-up threshold, a non-finite state, or more than max_steps steps.
OdeSolution integrate(const OdeSpec& spec);

// Value and derivatives up to order three of every state component at t,
// from one RK4 step off the nearest node and the Taylor recursion on rhs.
OdeState solution_jet(const OdeSpec& spec, const OdeSolution& sol, double t);

// Component k of the solution as a profile on [t0, t1].
ProfileFn solution_profile(const OdeSpec& spec, const OdeSolution& sol, std::size_t k,
                           std::string label);

struct ReconstructionOptions {
  double step = 1e-3;
  std::size_t probe_steps = 0;  // 0: per-case default; errors taken at n, 2n, 4n
  std::size_t consistency_grid = 21;
  double target_shift = 0.0;  // controls only: offsets the consistency target
  double blowup = 1e12;
  std::size_t max_steps = 10'000'000;
};

struct ComponentError {
  std::string name;      // e.g. "f", "g'", "h"
  double sup_error = 0.0;
};

struct ReconstructionReport {
  std::string id;
  std::string equation;               // the integrated relation, in words
  double t0 = 0.0, t1 = 0.0;
  double step = 0.0;
  std::size_t samples = 0;
  std::vector<ComponentError> components;
  double sup_error = 0.0;              // max over components at `step`
  std::vector<std::size_t> probe_steps;
  std::vector<double> probe_errors;
  std::vector<double> factors;         // successive error ratios
  double order = 0.0;                  // log2 of the geometric-mean factor
  Curvature which = Curvature::H;
  double target = 0.0;
  double consistency_dev = 0.0;        // max |K - K0| or |H - H0| on the chart
  std::vector<double> grid_t;          // sample abscissae of the first ODE
  std::vector<double> numeric;         // first component, numeric
  std::vector<double> exact;           // first component, closed form
};

// Theorem ids with an integrable relation: 4.2 4.3b 4.3c 4.4b 5.3a 5.3b 6.3.
std::vector<std::string> reconstruction_ids();

// Integrates the relation forced by the proof of `id`, compares against the
// closed form, estimates the convergence order and substitutes the
// reconstructed profiles back into the family chart.
ReconstructionReport reconstruct(std::string_view id, const FamilyInputs& in = {},
                                 const ReconstructionOptions& opts = {});

enum class WitnessKind { Vanishing, NonVanishing };

struct WitnessOptions {
  std::size_t samples = 101;
  double torsion_tol = 1e-12;  // vanishing cases: max |quantity| must stay below
  double floor = 1e-8;         // non-vanishing cases: min |quantity| must exceed
};

struct WitnessReport {
  std::string id;
  std::string statement;
  std::string quantity;
  WitnessKind kind = WitnessKind::Vanishing;
  Params constants;
  std::size_t samples = 0;
  double max_abs = 0.0;
  double min_abs = 0.0;
  double relation_residual = 0.0;  // how well the forced relation is met
  double threshold = 0.0;
  bool contradiction = false;
};

// thm5.2-lin thm5.2-exp thm6.2-lin thm6.2-rel thm4.2-a12 thm6.1-poly, plus
// the control "control-independent" whose profiles are not forced into the
// relation and therefore must not confirm a contradiction.
std::vector<std::string> witness_ids();
WitnessReport nonexistence_witness(std::string_view id, const WitnessOptions& opts = {});

}  // namespace iso3
