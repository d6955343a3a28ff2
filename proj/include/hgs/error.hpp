#pragma once

#include <stdexcept>
#include <string>

namespace hgs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure exceeded its configured element cap.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

/// A group catalog was asked for an order it cannot classify completely.
class CatalogIncomplete : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arithmetic of (p, m) or on an input group failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgs
