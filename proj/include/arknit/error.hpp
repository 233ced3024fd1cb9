#pragma once

#include <stdexcept>
#include <string>

namespace arknit {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input data (dangling arrow endpoints, bad labels, shape mismatches).
class ValidationError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

/// An operation was called outside its domain (projective summand passed to tau, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// The finite window is too small for the requested answer.
class TruncationError : public Error {
public:
  TruncationError(const std::string& what, int required_level = -1)
      : Error(what), required_level_(required_level) {}
  const char* kind() const noexcept override { return "truncation"; }
  /// Smallest level known to suffice, or -1 when unknown.
  int required_level() const noexcept { return required_level_; }

private:
  int required_level_;
};

/// The generic-element search could not split an endomorphism ring over the chosen field.
class FieldExtensionError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "field"; }
};

/// Two independent computations disagreed. Always a bug.
class CrossValidationError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "cross-validation"; }
};

}  // namespace arknit
