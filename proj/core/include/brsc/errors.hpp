#pragma once

#include <stdexcept>
#include <string>

namespace brsc {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, inconsistent universes, parameters out of range,
// or a precondition of an operation that does not hold for the given complex.
struct UsageError : Error {
  using Error::Error;
};

// An operation would enumerate more state than the configured vertex cap
// allows (subset scans are exponential in the universe size).
struct CapError : Error {
  using Error::Error;
};

}  // namespace brsc
