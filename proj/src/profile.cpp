#include "iso3/profile.hpp"

#include <sstream>

#include "iso3/error.hpp"

namespace iso3 {

namespace {

std::string describe(const std::string& label, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "profile '" << label << "' at t=" << t;
  return os.str();
}

}  // namespace

Taylor3 ProfileFn::eval(double t) const {
  if (!domain_.contains(t)) {
    std::ostringstream os;
    os.precision(17);
    os << describe(label_, t) << " outside domain [" << domain_.lo << ", " << domain_.hi << "]";
    throw DomainError(os.str());
  }
  Taylor3 r;
  try {
    r = fn_(Taylor3::variable(t));
  } catch (const DomainError& e) {
    throw DomainError(describe(label_, t) + ": " + e.what());
  }
  if (!r.finite()) throw DomainError(describe(label_, t) + ": non-finite derivative");
  return r;
}

Taylor3 ProfileFn::operator()(const Taylor3& s) const {
  const Taylor3 d = eval(s.value());
  return chain(s, d[0], d[1], d[2], d[3]);
}

BiJet ProfileFn::operator()(const BiJet& s) const { return chain(s, eval(s.val)); }

ProfileFn ProfileFn::affine(double slope, double offset) {
  std::ostringstream os;
  os.precision(17);
  os << slope << "*t + " << offset;
  return {os.str(), [slope, offset](const Taylor3& t) { return slope * t + offset; }};
}

}  // namespace iso3
