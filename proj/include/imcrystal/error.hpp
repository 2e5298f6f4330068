#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input outside the mathematical domain of an operation (pole at q = 0,
// lambda(h) = 0, inhomogeneous element where a weight is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Division by zero or by a value the coefficient ring cannot invert.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace imc
