#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stackopt {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Problems with user-supplied input (CLI exit code 1).
class InputError : public Error {
public:
  using Error::Error;
};

class ValidationError : public InputError {
public:
  ValidationError(std::string field, std::string reason)
      : InputError(field + ": " + reason)
      , field_{std::move(field)}
      , reason_{std::move(reason)} {
  }

  std::string const& field() const noexcept { return field_; }
  std::string const& reason() const noexcept { return reason_; }

private:
  std::string field_;
  std::string reason_;
};

class ConfigInvalid : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class IoError : public Error {
public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
public:
  using Error::Error;
};

class EmptyInput : public Error {
public:
  using Error::Error;
};

class NonpositiveBase : public Error {
public:
  using Error::Error;
};

} // namespace stackopt
