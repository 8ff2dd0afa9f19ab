#pragma once

#include <stdexcept>
#include <string>

namespace weberosc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Hypergeometric lower parameter at a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Series did not meet its tolerance, or lost too many digits to cancellation.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class RootNotFoundError : public Error {
 public:
  using Error::Error;
};

class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

/// Thrown instead of returning infinities; carries the time at which the
/// evaluation left the double range.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double t)
      : Error(what + " (t = " + std::to_string(t) + ")"), t_{t} {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

class StepUnderflowError : public Error {
 public:
  StepUnderflowError(const std::string& what, double t)
      : Error(what + " (t = " + std::to_string(t) + ")"), t_{t} {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace weberosc
