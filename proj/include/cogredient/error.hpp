#pragma once

#include <stdexcept>
#include <string>

namespace cogredient {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring specs, documents, or element encodings.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different rings or have incompatible shapes.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed: non-unit, non-square,
/// degenerate or non-symmetric matrix, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured state budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cogredient
