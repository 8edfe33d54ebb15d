#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oseries {

/// Base class of all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A poset size that is smaller than the largest basis index of a series.
class InvalidSize : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; `position` is the 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position)
  {
  }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Wrong number of operands for an expression node.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds the size supported by an exhaustive algorithm.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An h*-vector with no chain-basis preimage.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// A draw vector that does not sum to the number of draws.
class CompositionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace oseries
