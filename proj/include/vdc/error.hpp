#pragma once

#include <stdexcept>
#include <string>

namespace vdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (face lists, family specs, instance files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold for the given arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact search ran past its time budget without reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by canonical_form() when the object is larger than the bound
/// for which canonical keys are guaranteed exact.
class CanonicalBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vdc
