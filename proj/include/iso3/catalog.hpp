#pragma once

// Constructors for the translation-surface families and the theorem
// solutions, plus family-specialised closed-form curvature evaluators.
//
// Parameterisations (all profiles are ProfileFn):
//   I1*            (x, y) -> (x, y, f(x) + g(y))
//   I2*            (x, z) -> (x, f(x) + g(z), z)
//   I3*            (y, z) -> 1/2 (f(y) + g(z), y - z + pi, y + z)
//   affine-first   (x, y) -> (x, y, f(a11 x + a12 y) + g(a21 x + a22 y))
//   affine-second  (x, z) -> (x, f(u) + g(v), z),  u = a11 x + a12 z, v = a21 x + a22 z
//   type-II        (x, y) -> (x + y, a x + g(y), f(x) + h(y))
//   type-III       (x, y) -> (x + y, f(x) + g(y), a x + h(y))

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iso3/kernel.hpp"
#include "iso3/profile.hpp"

namespace iso3 {

inline constexpr double kBranchInset = 1e-3;

class AffineFrame {
 public:
  // Throws ConstraintError when the matrix is singular.
  static AffineFrame make(double a11, double a12, double a21, double a22);
  static AffineFrame identity() { return make(1.0, 0.0, 0.0, 1.0); }

  double a11() const { return a11_; }
  double a12() const { return a12_; }
  double a21() const { return a21_; }
  double a22() const { return a22_; }
  double omega() const { return omega_; }

  template <class T>
  T u(const T& x, const T& y) const { return a11_ * x + a12_ * y; }
  template <class T>
  T v(const T& x, const T& y) const { return a21_ * x + a22_ * y; }

 private:
  AffineFrame(double a11, double a12, double a21, double a22)
      : a11_(a11), a12_(a12), a21_(a21), a22_(a22), omega_(a11 * a22 - a12 * a21) {}

  double a11_, a12_, a21_, a22_, omega_;
};

enum class OrthoKind { I1, I2, I3 };
enum class Curvature { K, H };

std::string to_string(Curvature c);

struct Expected {
  Curvature which = Curvature::H;
  double value = 0.0;
};

// Regularity and torsion conditions are checked on a grid x grid sample of
// the declared domain. This is a sampling check, not a proof.
struct ValidationOptions {
  std::size_t grid = 101;
  double eps_reg = kEpsReg;
  double torsion_floor = 1e-12;
};

struct FamilySpec {
  std::string id;
  Family family = Family::Generic;
  std::optional<AffineFrame> frame;
  double a = 0.0;
  ProfileFn f;
  ProfileFn g;
  ProfileFn h;
  Params constants;
  Rect domain;
  std::optional<Expected> expected;
  std::string anchor;
};

SurfaceChart make_orthogonal_type(OrthoKind kind, const ProfileFn& f, const ProfileFn& g,
                                  const Rect& domain, const ValidationOptions& opts = {});
SurfaceChart make_affine_first(const AffineFrame& frame, const ProfileFn& f, const ProfileFn& g,
                               const Rect& domain, const ValidationOptions& opts = {});
SurfaceChart make_affine_second(const AffineFrame& frame, const ProfileFn& f, const ProfileFn& g,
                                const Rect& domain, const ValidationOptions& opts = {});
SurfaceChart make_type_II(double a, const ProfileFn& f, const ProfileFn& g, const ProfileFn& h,
                          const Rect& domain, const ValidationOptions& opts = {});
SurfaceChart make_type_III(double a, const ProfileFn& f, const ProfileFn& g, const ProfileFn& h,
                           const Rect& domain, const ValidationOptions& opts = {});

// Dispatches on spec.family; validates as the matching constructor does.
SurfaceChart make_chart(const FamilySpec& spec, const ValidationOptions& opts = {});

// Closed forms exist for affine-second (and I2*, its identity-frame case),
// type-II and type-III. Throw RegularityError where the denominator vanishes
// and ConstraintError for families without a closed form.
bool has_closed_form(const FamilySpec& spec);
double closed_form_K(const FamilySpec& spec, double u, double v);
double closed_form_H(const FamilySpec& spec, double u, double v);

// Optional overrides for catalog entries. Only the fields meaningful for a
// given entry are read; unknown constants are rejected.
struct FamilyInputs {
  Params constants;
  std::optional<ProfileFn> f;
  std::optional<ProfileFn> g;
  std::optional<ProfileFn> h;
  std::optional<Rect> domain;
  std::optional<OrthoKind> kind;
};

// Theorem solutions and minimal-surface members:
//   4.2 4.3a 4.3b 4.3c 4.4a 4.4b 5.3a 5.3b 6.3 scherk-1 .. scherk-6
// The returned spec carries the expected constant curvature.
FamilySpec theorem_family(std::string_view id, const FamilyInputs& in = {});

// Any catalog id: the theorem ids above plus the base constructors
// orthogonal, affine-first, affine-second, type-II, type-III.
FamilySpec family_spec(std::string_view id, const FamilyInputs& in = {});

struct FamilyDescriptor {
  std::string id;
  std::string kind;  // "constructor" | "theorem" | "scherk"
  Family family = Family::Generic;
  std::string parameters;  // names of the chart parameters, e.g. "(x,z)"
  std::string anchor;
  std::string summary;
  std::vector<std::string> constraints;
  std::vector<std::string> suppressed;  // integration constants fixed to zero
  Params defaults;
  Rect domain;
  std::optional<Expected> expected;
};

// Deterministic order: base constructors first, then theorem ids, then the
// minimal-surface members.
const std::vector<FamilyDescriptor>& list_catalog();
const FamilyDescriptor& describe_family(std::string_view id);

std::vector<std::string> theorem_ids();
std::vector<std::string> scherk_ids();

}  // namespace iso3
