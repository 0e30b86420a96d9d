#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftlab {

/// Base of every error raised by the library. Each subclass corresponds to one
/// failure signal of the numerical contracts; the CLI maps them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative procedure failed to converge (Newton, series, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A user supplied function produced a non-finite value at a quadrature node.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double node) : Error(what), node_(node) {}
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// Non-finite state in a time stepper.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, std::size_t step, double last_valid_time)
      : Error(what), step_(step), last_valid_time_(last_valid_time) {}
  std::size_t step() const noexcept { return step_; }
  double last_valid_time() const noexcept { return last_valid_time_; }

 private:
  std::size_t step_;
  double last_valid_time_;
};

/// Endpoint equations have no one-cut regular solution.
class NoOneCutSolution : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree do not, or a quantity violates a hard bound.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Discretized Stieltjes produced a nonpositive recurrence coefficient.
class BreakdownError : public Error {
 public:
  BreakdownError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Input leads to an empty or otherwise unusable discretization.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace ftlab
