#pragma once

#include <stdexcept>
#include <string>

namespace cnls {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence or array had the wrong length for its grid.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A mode index fell outside the retained band.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two operands live on different grids or lattices.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Input has spectral content outside the band an operation requires.
class BandError : public Error {
 public:
  using Error::Error;
};

/// Invalid solver, experiment or survey configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A ratio or norm was requested for an input whose denominator vanishes.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A cubic-cost oracle was called above its size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Time stepping produced non-finite values or tripped the norm watchdog.
class InstabilityError : public Error {
 public:
  InstabilityError(long step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

  long step() const noexcept { return step_; }

 private:
  long step_;
};

/// Malformed file contents (trajectory or report).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnls
