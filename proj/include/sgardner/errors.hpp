#pragma once

#include <stdexcept>
#include <string>

namespace sgardner {

// Base for every error raised by the library. The CLI maps these to exit
// code 2 (usage/IO) or reports them as verification failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands live in Grassmann algebras with different generator counts.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Operation requires an even (or otherwise homogeneous) element.
class ParityError : public Error {
public:
  using Error::Error;
};

// Zero body where an inverse or logarithm is requested.
class DomainError : public Error {
public:
  using Error::Error;
};

// Exponent too large to evaluate in double precision.
class RangeError : public Error {
public:
  using Error::Error;
};

// Solution parameters violate a builder precondition.
class ParameterError : public Error {
public:
  using Error::Error;
};

// Tau pair frame does not match the requested equation.
class FrameError : public Error {
public:
  using Error::Error;
};

// Body of g or f vanishes at an evaluation point.
class SingularPointError : public Error {
public:
  using Error::Error;
};

// Malformed input document (JSON, CSV, config).
class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace sgardner
