#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goldnews {

// Base of every error raised by the library. what() is "<module>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message);

  const std::string& module() const noexcept { return module_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string module_;
  std::string message_;
};

// Caller supplied something outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

// A required column or mapping is missing.
class SchemaError : public InputError {
 public:
  SchemaError(std::string module, const std::string& message, std::string column);
  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

// A data row violates a record invariant. Row numbers are 1-based data rows
// (the header is row 0).
class ValidationError : public InputError {
 public:
  ValidationError(std::string module, const std::string& message, std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class EncodingError : public InputError {
 public:
  using InputError::InputError;
};

// Malformed text input. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string module, const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class DegenerateRegressorError : public Error {
 public:
  using Error::Error;
};

class LoadError : public Error {
 public:
  using Error::Error;
};

class VersionError : public LoadError {
 public:
  using LoadError::LoadError;
};

class FingerprintMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace goldnews
