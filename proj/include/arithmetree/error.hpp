#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arithmetree {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was applied to the leaf where a non-trivial tree is required.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// 0 <+ 0, 0 +> 0 and 0 <+> 0 have no meaning on groves.
class UndefinedCase : public Error {
 public:
  using Error::Error;
};

// Enumeration or multiplication above the configured degree cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InvalidName : public Error {
 public:
  using Error::Error;
};

// Binary and planar values mixed, or a planar-only operation in binary mode.
class FlavorMismatch : public Error {
 public:
  using Error::Error;
};

// Precondition on argument values: empty groves, unequal degrees,
// incomparable interval endpoints, out-of-range indices.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace arithmetree
