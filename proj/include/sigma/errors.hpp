#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigma {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound (iteration, enumeration, quotient degree, search
/// budget) would have to be exceeded to answer the query.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search finished without a certain answer.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two subgroups that must live in the same ambient group do not.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sigma
