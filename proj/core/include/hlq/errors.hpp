#pragma once

#include <stdexcept>
#include <string>

namespace hlq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact evaluation hit a vanishing denominator. Random-point verifiers
/// catch this and resample.
class DenominatorZero : public Error {
 public:
  explicit DenominatorZero(const std::string& what = "denominator vanishes at evaluation point")
      : Error(what) {}
};

/// A division that must be exact left a remainder, or a symmetrization
/// failed to cancel. Always an internal bug.
class NotExact : public Error {
 public:
  using Error::Error;
};

}  // namespace hlq
