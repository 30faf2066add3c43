#pragma once

#include <stdexcept>
#include <string>

namespace lvl2 {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series (or rational function) has no multiplicative inverse.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A precondition on the arguments of an operation was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace lvl2
