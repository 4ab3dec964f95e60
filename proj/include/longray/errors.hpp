#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longray {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a precondition: dimension out of range, empty subset
/// where a nonempty one is required, mismatched arities and so on.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed concrete syntax. `position` is a 0-based byte offset into the
/// input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace longray
