#pragma once

#include <stdexcept>
#include <string>

namespace confsched {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or indices that do not fit the instance they are used with.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Instance data that violates an invariant (self-loop, n = 0, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A parameter outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Size guard of an exhaustive routine exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A specialised solver was called on an instance without its structure.
class StructureMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace confsched
