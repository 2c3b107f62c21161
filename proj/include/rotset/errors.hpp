#pragma once

#include <stdexcept>
#include <string>

namespace rotset {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Homogeneous point lies on the line at infinity (or too close to chart it).
struct AtInfinityError : Error {
  using Error::Error;
};

/// Exact integer arithmetic would wrap.
struct OverflowError : Error {
  using Error::Error;
};

/// Matrix is not in SL(3,Z).
struct NotUnimodularError : Error {
  using Error::Error;
};

/// Fixed-point solve for the inverse map did not reach tolerance.
struct InverseNotConvergedError : Error {
  using Error::Error;
};

/// Region touches or crosses the pulled-back infinity line.
struct RegionMeetsInfinityLineError : Error {
  using Error::Error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

/// No admissible k0 within the scan depth, or the hypothesis margin is zero.
struct CertificateFailedError : Error {
  using Error::Error;
};

/// Config file rejected; carries a 1-based line number (0 = whole file).
struct ConfigError : Error {
  ConfigError(int line_number, const std::string& what)
      : Error("config line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

}  // namespace rotset
