#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsext {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A field element code outside 0..q-1, or an unsupported field order.
class EncodingError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

/// The code has a single nonzero weight, so the second smallest weight is undefined.
class GapUndefinedError : public Error {
 public:
  using Error::Error;
};

/// The code has an all-zero column; the point-multiset view does not apply.
class DegenerateCodeError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Objects that must belong together (a code and its intersection matrix) do not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A recomputed distance contradicts the extension guarantee. Always a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lsext
