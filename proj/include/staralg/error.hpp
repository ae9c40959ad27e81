#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace staralg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different coefficient rings (characteristic mismatch).
class RingMismatchError : public Error {
public:
  using Error::Error;
};

/// A Grassmann truncation is too small (or unsupported) for the request.
class TruncationError : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed the configured total-degree cap.
class DegreeCapError : public Error {
public:
  using Error::Error;
};

/// A precondition on an operation's input was violated.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Text did not match the polynomial grammar; `position` is a 0-based offset.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace staralg
