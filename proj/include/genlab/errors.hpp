#pragma once

#include <stdexcept>
#include <string>

namespace genlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds a configured enumeration cap.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ElementNotInLattice : public Error {
 public:
  using Error::Error;
};

class NotIDTree : public Error {
 public:
  using Error::Error;
};

class NotWWord : public Error {
 public:
  using Error::Error;
};

class NotInGSet : public Error {
 public:
  using Error::Error;
};

/// A value that must be an integer (or integral polynomial) is not.
class IntegralityFailure : public Error {
 public:
  using Error::Error;
};

/// Zaslavsky-style count came out negative: the input polynomial is inconsistent.
class NegativeResult : public Error {
 public:
  using Error::Error;
};

}  // namespace genlab
