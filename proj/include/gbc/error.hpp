#pragma once

#include <stdexcept>
#include <string>

namespace gbc {

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form would divide by a parameter that is zero.
class DegenerateParameterError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ZeroPolynomialError : public PreconditionError {
 public:
  ZeroPolynomialError() : PreconditionError("operation undefined on the zero polynomial") {}
};

/// Text could not be read as a rational, parameter tuple, or option value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gbc
