#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tutte {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division that was expected to be exact left a remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class TooManyEdges : public Error {
 public:
  using Error::Error;
};

/// A fan-like construction needs a mark (usually w) that the base lacks,
/// or the marks are not distinct.
class MissingMark : public Error {
 public:
  using Error::Error;
};

/// Family size outside the range a construction accepts.
class BadN : public Error {
 public:
  using Error::Error;
};

}  // namespace tutte
