#pragma once

#include <stdexcept>
#include <string>

namespace figlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a linear-algebra or module operation have incompatible shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input data violates a structural invariant (group axioms, relations of a
/// representation, the windowed functoriality contract, ...). The message
/// carries the witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation needs degrees beyond the window the module was built on.
class WindowExhausted : public Error {
 public:
  using Error::Error;
};

/// A single degree would exceed the configured dimension cap.
class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for the given arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace figlab
