#pragma once

#include <stdexcept>
#include <string>

namespace kantor {

/// Base class for all workbench errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, unparsable files, unknown ids or suites.
struct InputError : Error {
  using Error::Error;
};

struct DimensionMismatch : InputError {
  using InputError::InputError;
};

struct ParseError : InputError {
  using InputError::InputError;
};

/// A mathematical hypothesis required by a construction does not hold for
/// the supplied data (e.g. a singular operator where invertibility is forced,
/// a map that fails its automorphism sweep, degenerate eigenprojection roots).
struct HypothesisError : Error {
  using Error::Error;
};

struct SingularOperatorError : HypothesisError {
  using HypothesisError::HypothesisError;
};

/// A construction's own post-hoc verification failed.  On valid input this
/// indicates an internal bug, so it is kept separate from HypothesisError.
struct ConstructionError : Error {
  using Error::Error;
};

}  // namespace kantor
