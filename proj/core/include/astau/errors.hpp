#pragma once

#include <stdexcept>
#include <string>

namespace astau {

/// Bad arguments or inputs outside an operation's supported range.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NumericalFailure {
  non_convergence,
  contour_collision,
  tail_bound,
  singular_factorization,
  non_finite,
  pole_encountered,
  non_positive_tau,
};

const char* to_string(NumericalFailure kind) noexcept;

/// A computation that was set up correctly but could not deliver a trustworthy number.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(NumericalFailure kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  NumericalFailure kind() const noexcept { return kind_; }

 private:
  NumericalFailure kind_;
};

}  // namespace astau
