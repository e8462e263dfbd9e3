#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teeprobe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad DSL text, schema violation,
/// unknown party, parameter out of range).
class InputError : public Error {
 public:
  using Error::Error;
};

/// DSL syntax error; `position()` is the 0-based byte offset into the text.
class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : InputError("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The requested evaluation is not defined for this geometry (a union whose
/// doubled surface is not a punctured sphere).
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

}  // namespace teeprobe
