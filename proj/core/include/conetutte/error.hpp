#pragma once

#include <stdexcept>
#include <string>

namespace conetutte {

// Base class for every error raised by the library. Verification
// failures are not errors; they are reported through verify::Report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// An exact division left a remainder.
class DivisionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Bad vertex/edge id, wrong graph shape, or a size bound was exceeded.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace conetutte
