#pragma once

#include <stdexcept>
#include <string>

namespace umd {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point lies outside the domain of the function being evaluated.
struct DomainError : Error {
  using Error::Error;
};

/// The requested operation is not defined for the given oracle
/// (e.g. a mirror-descent update on a nondifferentiable regularizer).
struct UnsupportedError : Error {
  using Error::Error;
};

/// A linear program over an unbounded set has no finite minimum.
struct UnboundedError : Error {
  using Error::Error;
};

/// Invalid argument (nonpositive constant, bad horizon, ...).
struct ArgumentError : Error {
  using Error::Error;
};

/// A solver step violated the trajectory conditions beyond tolerance.
struct CertificationError : Error {
  using Error::Error;
};

/// Mismatched vector/matrix dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// Classification targets outside {-1, +1}.
struct LabelError : Error {
  using Error::Error;
};

/// Malformed input file; message carries row/column location.
struct ParseError : Error {
  using Error::Error;
};

/// An adversary exceeded its declared payoff bound.
struct BoundViolation : Error {
  using Error::Error;
};

/// Filesystem failure while reading or writing artifacts.
struct IoError : Error {
  using Error::Error;
};

}  // namespace umd
