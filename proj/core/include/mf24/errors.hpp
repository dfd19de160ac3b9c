#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mf24 {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnitSeries : public Error {
 public:
  using Error::Error;
};

class FractionalExponent : public Error {
 public:
  using Error::Error;
};

class NegativeValuation : public Error {
 public:
  using Error::Error;
};

class NonIntegralWeight : public Error {
 public:
  using Error::Error;
};

class InvalidEtaQuotient : public Error {
 public:
  using Error::Error;
};

class UnknownPair : public Error {
 public:
  using Error::Error;
};

class BadDivisor : public Error {
 public:
  using Error::Error;
};

class NotInSpace : public Error {
 public:
  using Error::Error;
};

class AmbiguousSolution : public Error {
 public:
  using Error::Error;
};

class UnknownForm : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A table fixture file that cannot be read or does not match its schema.
class FixtureError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is the 0-based offset of the
/// offending character in the input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

  /// The same error located `offset` characters further into an enclosing string.
  ParseError shifted(std::size_t offset) const { return ParseError(message_, position_ + offset); }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace mf24
