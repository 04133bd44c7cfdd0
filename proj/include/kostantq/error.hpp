#pragma once

#include <stdexcept>
#include <string>

namespace kostantq {

/// A mathematically invalid request: non-dominant weight, trace mismatch,
/// weight outside the root lattice, unsupported rank.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Chamber fitting failed validation on held-out lattice points.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kostantq
