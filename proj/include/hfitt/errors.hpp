#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfitt {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or job document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live over different rings or quotients.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

/// Violated precondition on an otherwise well-formed input (shapes, ranges, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The Groebner step budget ran out.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfitt
