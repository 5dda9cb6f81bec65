#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delista {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Error categories used throughout the library. The CLI maps each category
// to a distinct exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible or out-of-range dimensions (m = 0, m > N, length mismatch...).
struct DimensionError : Error {
  using Error::Error;
};

// Invalid parameter values (probabilities outside (0,1), alpha out of range...).
struct ParameterError : Error {
  using Error::Error;
};

// Request exceeds a configured memory or size cap.
struct ResourceError : Error {
  using Error::Error;
};

// Degenerate signal: an operation's scale is undefined (zero signal with a
// finite SNR target, zero ground truth in an NMSE ratio).
struct DegenerateSignalError : Error {
  using Error::Error;
};

// File I/O failure; the message carries the offending path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace delista
