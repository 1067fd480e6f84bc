#pragma once

#include <stdexcept>
#include <string>

namespace mect {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Attenuation table input violates the format or its invariants.
struct MalformedTable : Error {
  using Error::Error;
};

/// Energy outside a table's tabulated range; the library never extrapolates.
struct OutOfRange : Error {
  using Error::Error;
};

/// Spectrum input violates the format or its invariants.
struct MalformedSpectrum : Error {
  using Error::Error;
};

/// Spectrum with zero total weight cannot be normalized.
struct EmptySpectrum : Error {
  using Error::Error;
};

/// Matrix or vector dimensions incompatible with the operation.
struct ShapeError : Error {
  using Error::Error;
};

/// Argument outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// A randomized search ran out of attempts.
struct SearchExhausted : Error {
  using Error::Error;
};

/// A statistical verification produced no usable runs.
struct Inconclusive : Error {
  using Error::Error;
};

}  // namespace mect
