#pragma once

#include <stdexcept>
#include <string>

namespace coxspec {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad construction data or violated operation precondition.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Operands belong to different Coxeter systems.
class MixedSystem : public Error {
 public:
  explicit MixedSystem(const std::string& what) : Error(what) {}
};

// An enumeration would exceed the configured hard bound.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

// A search that is guaranteed to succeed came up empty, or a structural
// assertion failed.  Signals a bug in the implementation, not bad input.
class InternalCheckFailure : public Error {
 public:
  explicit InternalCheckFailure(const std::string& what) : Error(what) {}
};

}  // namespace coxspec
