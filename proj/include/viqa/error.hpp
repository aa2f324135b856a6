#pragma once

#include <stdexcept>
#include <string>

namespace viqa {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad command-line usage or invalid configuration values. CLI exit code 1.
struct UsageError : Error {
  using Error::Error;
};

/// Malformed or inconsistent input data (manifests, annotations, images,
/// checkpoints). CLI exit code 2.
struct DataError : Error {
  using Error::Error;
};

/// Tensor shape mismatch; message names the offending shapes. CLI exit code 2.
struct DimensionError : Error {
  using Error::Error;
};

/// Non-finite values where finite ones are required (training aborts,
/// gradient blow-ups). CLI exit code 3.
struct NumericError : Error {
  using Error::Error;
};

}  // namespace viqa
