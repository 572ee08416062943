#pragma once

#include <stdexcept>
#include <string>

namespace cliquepf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed graph input (bad syntax, out-of-range endpoint, loop, duplicate edge).
struct ParseError : Error {
  using Error::Error;
};

/// Invalid algorithm parameters: m out of range, gamma above the regime
/// constant, large-gap regime without m >= 10 and n >= 4m, and so on.
struct ParameterError : Error {
  using Error::Error;
};

/// Argument outside the mathematical domain of a formula (t outside [0,1], beta <= 1).
struct DomainError : Error {
  using Error::Error;
};

/// Exhaustive enumeration refused because n exceeds the oracle cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// g(0) = 0 makes the triangular system for the log-derivatives singular.
struct DegenerateSystem : Error {
  using Error::Error;
};

/// decide_density was asked to decide with a certificate looser than ln 1.1.
struct DecideRefused : Error {
  using Error::Error;
};

/// Invalid vector input to the angle-sum check.
struct InputError : Error {
  using Error::Error;
};

}  // namespace cliquepf
