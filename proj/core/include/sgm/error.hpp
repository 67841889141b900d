#pragma once

#include <stdexcept>
#include <string>

namespace sgm {

// Base for every error the library reports. The CLI maps subclasses to exit
// codes, so keep the hierarchy flat and meaningful.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to run on an instance above its bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label) : Error("unknown label '" + label + "'") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what) {}
};

}  // namespace sgm
