#pragma once

#include <stdexcept>
#include <string>

namespace iso3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation outside a profile's smooth domain, or a non-finite jet.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Tangent plane is isotropic (W <= eps_reg).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// A family constructor's regularity or torsion condition fails.
class RegularityError : public Error {
 public:
  using Error::Error;
};

// Theorem constants violate the relations forced by the classification.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace iso3
