#pragma once

#include <stdexcept>
#include <string>

namespace ncprob {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand shapes disagree (e.g. adding a 2x2 to a 3x3).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A requested dimension is out of the supported range.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An operator required to be self-adjoint is not, beyond tolerance.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

// An iterative routine failed to converge within its budget.
// Carries the best partial value when one is available.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
  ConvergenceError(const std::string& msg, double partial_value)
      : Error(msg), partial(partial_value), has_partial(true) {}
  double partial = 0.0;
  bool has_partial = false;
};

// A function was evaluated outside its domain (NaN/Inf produced or consumed).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A parameter violates its documented range.
class ParamError : public Error {
 public:
  using Error::Error;
};

// An operator required to be positive semidefinite is not, beyond tolerance.
class PositivityError : public Error {
 public:
  using Error::Error;
};

// An operator required to be an orthogonal projection is not.
class ProjectionError : public Error {
 public:
  using Error::Error;
};

// A site index does not exist in the tensor-product space.
class SiteError : public Error {
 public:
  using Error::Error;
};

// Input data violates a theorem hypothesis; verification refuses to run
// rather than reporting a vacuous pass.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncprob
