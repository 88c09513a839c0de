#pragma once

#include <stdexcept>
#include <string>

namespace hlvir {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands from two different coefficient fields met in one operation.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A rational function has an infinite limit at the requested point.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// c_mu(rho) (or an expansion needing it) has no finite value at the requested rho.
class SingularCoefficient : public Error {
 public:
  using Error::Error;
};

/// The scalar product is undefined because some 1 - rho^k vanishes.
class DegeneratePairing : public Error {
 public:
  using Error::Error;
};

/// t_r^perp is undefined because 1 - rho^r vanishes.
class AdjointUndefined : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or parameters outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hlvir
