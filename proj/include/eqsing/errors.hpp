#ifndef EQSING_ERRORS_HPP
#define EQSING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqsing {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different numbers of variables, or an index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition on the input germ or action is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonIsolated : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotACriticalPoint : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Modulus must be prime for this operation.
class NotPrime : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A configured size cap (Milnor number, Hessian dimension, sieve bound) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A computed value contradicts a statement the toolkit treats as a theorem.
/// Raised only when an internal consistency assertion fails.
class ClaimViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eqsing

#endif  // EQSING_ERRORS_HPP
