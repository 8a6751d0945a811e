#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& point)
      : Error("pole at a = " + point), point_(point) {}
  const std::string& point() const noexcept { return point_; }

 private:
  std::string point_;
};

/// Two operands carry incompatible coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace siegel
