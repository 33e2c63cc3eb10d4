#ifndef QALG_CORE_ERROR_HPP
#define QALG_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qalg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition on an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme (root finder, quadrature, continued fraction) did not
/// reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Formal series operation applied to a series with an inadmissible constant
/// term or truncation order.
class OrderError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(const std::string& what, int required_digits)
      : Error(what), required_digits_(required_digits) {}
  int required_digits() const noexcept { return required_digits_; }

 private:
  int required_digits_;
};

class BranchError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

class DegenerateBasis : public Error {
 public:
  using Error::Error;
};

}  // namespace qalg

#endif  // QALG_CORE_ERROR_HPP
