#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spvote {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on a value was violated (out-of-range id, wrong n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed value object, e.g. a ranking that is not a permutation.
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Request exceeds a configured size cap.
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based line of the offending input, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace spvote
