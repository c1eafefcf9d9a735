#pragma once

#include <stdexcept>
#include <string>

namespace gwgr {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from one of the groups below.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input does not describe a valid problem (exit code 2 in the CLI).
class InputError : public Error {
public:
  using Error::Error;
};

// A computation ran but its result cannot be trusted (exit code 3).
class ResultError : public Error {
public:
  using Error::Error;
};

class InvalidGrassmannian : public InputError {
public:
  InvalidGrassmannian(int r, int k)
      : InputError("invalid Grassmannian G(" + std::to_string(r) + "," +
                   std::to_string(k) + "): need 1 <= r < k") {}
};

class DimensionMismatch : public InputError {
public:
  using InputError::InputError;
};

class PipelineNotApplicable : public InputError {
public:
  using InputError::InputError;
};

class PrecisionBudgetExceeded : public InputError {
public:
  using InputError::InputError;
};

class NonIntegerResult : public ResultError {
public:
  NonIntegerResult(std::string what, double residual)
      : ResultError(std::move(what)), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

class CrossCheckMismatch : public ResultError {
public:
  using ResultError::ResultError;
};

class ValidationFailure : public ResultError {
public:
  using ResultError::ResultError;
};

// Ring/series errors (charclass).
class NonUnitConstantTerm : public Error {
public:
  using Error::Error;
};

class TruncationTooLow : public Error {
public:
  using Error::Error;
};

class RingSpecError : public Error {
public:
  using Error::Error;
};

}  // namespace gwgr
