#pragma once

#include <stdexcept>
#include <string>

namespace gaugenorm {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside its admissible range (t outside (0,1], p < 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// The requested operation is not defined for this norm kind.
class UnsupportedSpec : public Error {
public:
  using Error::Error;
};

// Iteration limits, overflow, or an LP that should be feasible but is not.
class NumericalError : public Error {
public:
  using Error::Error;
};

}  // namespace gaugenorm
