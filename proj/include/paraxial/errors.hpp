#pragma once

#include <stdexcept>
#include <string>

namespace paraxial {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid parameters, initial data, or experiment configuration.
struct ConfigError : Error {
  using Error::Error;
};

/// A request would exceed a configured resource budget.
struct ResourceError : Error {
  using Error::Error;
};

/// A field was passed in the wrong Fourier frame.
struct FrameError : Error {
  using Error::Error;
};

/// Grids of two operands do not describe the same node set, or a grid
/// cannot resolve the requested spectrum.
struct GridError : Error {
  using Error::Error;
};

/// Spectral support violates the hyperbolic cutoff, or an elliptic mode
/// exceeded the amplitude cap.
struct SupportError : Error {
  using Error::Error;
};

}  // namespace paraxial
