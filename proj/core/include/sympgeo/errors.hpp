#pragma once

#include <stdexcept>

namespace sympgeo {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters, malformed input text, mismatched ambient spaces.
struct InputError : Error {
  using Error::Error;
};

// Mathematically impossible request: inverse of zero, a symplectic basis of a
// form that is not symplectic, and the like.
struct MathError : Error {
  using Error::Error;
};

// invert() applied to a rank-deficient matrix.
struct SingularMatrixError : MathError {
  using MathError::MathError;
};

// A line map that is not induced by any invertible semilinear transformation.
struct CollineationError : MathError {
  using MathError::MathError;
};

// An internal consistency check failed.  This signals a bug in the library,
// never bad user input.
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace sympgeo
