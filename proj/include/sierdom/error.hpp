#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sierdom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or assignment file. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

class DepthError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Assignment length does not match the graph.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Assignment uses a value outside the alphabet of its kind.
class KindError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Requested object would exceed a configured size limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace sierdom
