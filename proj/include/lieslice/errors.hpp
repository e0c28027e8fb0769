#pragma once

#include <stdexcept>
#include <string>

namespace lieslice {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad dimensions, rank-deficient
/// spans, unknown labels, violated preconditions). CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// Input is well formed but outside the catalog or spectrum limits the
/// library supports (irrational spectra, unknown semisimple classes,
/// class-only Levi factors). CLI exit code 3.
struct UnsupportedError : Error {
    using Error::Error;
};

/// A family evaluation hit a parameter where the fiber rank drops;
/// callers should use the limit machinery instead.
struct DegenerateParameterError : InputError {
    using InputError::InputError;
};

/// Fiberwise intersection dimension jumps across a family.
struct NonFlatIntersectionError : Error {
    using Error::Error;
};

/// A subalgebra fails the algebraicity saturation test and cannot be
/// integrated; the message carries the witness element.
struct NotIntegrableError : Error {
    using Error::Error;
};

}  // namespace lieslice
