#pragma once

#include <stdexcept>
#include <string>

namespace fqg {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or file contents.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands whose shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Data that fails a structural precondition (not a group, not a Hopf algebra, ...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace fqg
