#pragma once

#include <stdexcept>
#include <string>

namespace shiftchaos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequences, operators and coordinate maps carry exactly one index base.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

/// Every operator in the library requires |w| > 1.
class InvalidWeight : public Error {
 public:
  InvalidWeight() : Error("weight must satisfy |w|>1") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

class NotInDomain : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftchaos
