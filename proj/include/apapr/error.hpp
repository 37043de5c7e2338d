#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apapr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or model text. `position` is a 0-based byte offset
/// into the parsed string (npos when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? what
                  : what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundParameter : public Error {
 public:
  explicit UnboundParameter(std::string name)
      : Error("unbound parameter '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact operation has no answer: division by zero, inverting a
/// singular matrix, dividing by a non-constant polynomial.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace apapr
