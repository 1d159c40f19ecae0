#pragma once

#include <stdexcept>
#include <string>

namespace twgr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied data failed (non-prime p, bad table, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields, groups or rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A post-condition the library guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace twgr
