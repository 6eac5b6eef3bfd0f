#pragma once

#include <stdexcept>
#include <string>

namespace tricenter {

// Anything rooted in MathError is a math-domain failure (CLI exit 3);
// ConfigError covers bad user input (exit 2).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : MathError {
  using MathError::MathError;
};
// Homogeneous weights summing to zero: the point is at infinity.
struct ProjectiveError : MathError {
  using MathError::MathError;
};
struct PoleError : MathError {
  using MathError::MathError;
};
struct DegenerateCenterError : MathError {
  using MathError::MathError;
};
struct NotTraceableError : MathError {
  using MathError::MathError;
};
struct DegreeMismatchError : MathError {
  using MathError::MathError;
};
struct ZeroCoefficientError : MathError {
  using MathError::MathError;
};
struct RankDeficiencyError : MathError {
  using MathError::MathError;
};
struct DegenerateFrameError : MathError {
  using MathError::MathError;
};
struct AllPoledError : MathError {
  using MathError::MathError;
};

struct NonDecomposableError : MathError {
  NonDecomposableError(const std::string& msg, double t) : MathError(msg), witness(t) {}
  double witness;
};

struct BranchPoleError : MathError {
  BranchPoleError(const std::string& msg, double t) : MathError(msg), at(t) {}
  double at;
};

struct UnknownLabelError : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace tricenter
