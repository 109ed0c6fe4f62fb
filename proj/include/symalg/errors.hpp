#ifndef SYMALG_ERRORS_HPP
#define SYMALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Violation of a structural invariant (trace, homogeneity, exponent range, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Textual/JSON input rejected; `path()` points at the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Inversion is only defined for elements of the form u + f with u square-zero
// and f a nonzero rational constant; the reason records which half failed.
class NotInvertibleError : public Error {
 public:
  enum class Reason { zero_scalar, non_constant_scalar };

  NotInvertibleError(Reason reason, const std::string& message)
      : Error(message), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

}  // namespace symalg

#endif  // SYMALG_ERRORS_HPP
