#pragma once

#include <stdexcept>
#include <string>

namespace gkmn {

// Invalid argument outside a function's mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation hit (or requires crossing) a pole / singular line.
struct SingularityError : std::runtime_error {
  double location;
  SingularityError(const std::string& msg, double loc)
      : std::runtime_error(msg + " (at " + std::to_string(loc) + ")"), location(loc) {}
};

// An iterative kernel failed to converge within its depth cap.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters are valid numbers but outside the implemented theory
// (e.g. B = 0 linear system, alpha1 = 0).
struct OutOfScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A profile failed its root-ordering / energy-consistency validation.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed CLI / config input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gkmn
