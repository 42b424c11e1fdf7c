#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kahler {

/// Base for failures of a well-formed computation (CLI exit status 1).
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class PoleOnContour : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class DecayViolation : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class RootFinderFailure : public ComputationError {
public:
  using ComputationError::ComputationError;
};

class QuadratureFailure : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// Input that cannot be interpreted (CLI exit status 2).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
public:
  ParseError(const std::string& message, std::size_t position)
      : UsageError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Well-formed expression outside the supported meromorphic class.
class Unsupported : public UsageError {
public:
  using UsageError::UsageError;
};

}  // namespace kahler
