#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bstar {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_div: the dividend is not a polynomial multiple of the divisor.
struct NonExact : Error {
  using Error::Error;
};

// mk_power: the base polynomial is zero.
struct ZeroBase : Error {
  using Error::Error;
};

// Two power elements live over different parameter names.
struct ParameterMismatch : Error {
  using Error::Error;
};

// Two power elements live over different base polynomials.
struct BaseMismatch : Error {
  using Error::Error;
};

// Operator substitution where the variable sets are required to be disjoint.
struct VariableClash : Error {
  using Error::Error;
};

// Suspension exponent r < 2.
struct BadExponent : Error {
  using Error::Error;
};

// euler_field: the candidate weights do not make g weighted-homogeneous of degree 1.
struct NotWeightedHomogeneous : Error {
  using Error::Error;
};

// A condition that the underlying mathematics guarantees has failed: a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

// compose produced a certificate that does not verify: a bug.
struct ComposeVerificationFailure : InternalInconsistency {
  using InternalInconsistency::InternalInconsistency;
};

// An input certificate fails verification where a valid one is required.
struct VerificationFailure : Error {
  using Error::Error;
};

// Malformed expression text; carries the byte offset of the offending token.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UndeclaredVariable : Error {
  using Error::Error;
};

// Factored input with a factor that does not expose a rational root.
struct NonRationalRoot : Error {
  using Error::Error;
};

}  // namespace bstar
