#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpure {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad syntax, unknown variables, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with the byte offset into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exponent or level outside the representable range.
class OverflowError : public InputError {
 public:
  using InputError::InputError;
};

/// Arithmetic that has no answer (division by zero, dimension of the empty variety).
class MathError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was hit before the computation finished.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace fpure
