#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "iso3/taylor.hpp"

namespace iso3 {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static constexpr Interval all() { return {}; }
  bool contains(double t) const { return t >= lo && t <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  double length() const { return hi - lo; }
  bool empty() const { return !(lo <= hi); }
};

// A scalar profile of one real variable together with the closed interval on
// which it is smooth. Evaluation outside the interval, or any non-finite
// derivative, raises DomainError.
class ProfileFn {
 public:
  using Fn = std::function<Taylor3(const Taylor3&)>;

  ProfileFn() : ProfileFn("0", [](const Taylor3&) { return Taylor3(0.0); }) {}
  ProfileFn(std::string label, Fn fn, Interval domain = Interval::all())
      : label_(std::move(label)), fn_(std::move(fn)), domain_(domain) {}

  // Value and derivatives up to order 3 at t.
  Taylor3 eval(double t) const;

  // Composition with an inner jet; the inner value must lie in the domain.
  Taylor3 operator()(const Taylor3& s) const;
  BiJet operator()(const BiJet& s) const;

  double value(double t) const { return eval(t).value(); }

  const std::string& label() const { return label_; }
  const Interval& domain() const { return domain_; }
  ProfileFn with_domain(Interval d) const { return {label_, fn_, d}; }

  static ProfileFn zero() { return {}; }
  static ProfileFn affine(double slope, double offset = 0.0);

 private:
  std::string label_;
  Fn fn_;
  Interval domain_;
};

}  // namespace iso3
