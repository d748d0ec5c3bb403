#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaussmap {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when input text cannot be parsed; carries the byte offset of the
/// first offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Raised when curve data is inconsistent (non-squarefree f, bad exponents,
/// unsupported gcd pattern, and so on).
class CurveError : public Error {
public:
  using Error::Error;
};

/// Raised when elements attached to different curves are combined.
class CurveMismatchError : public Error {
public:
  using Error::Error;
};

/// Raised when the standard pencil (1, 1/x) is unavailable because f(0) = 0.
/// Carries the smallest integer t >= 0 with f(t) != 0.
class NeedsShiftError : public Error {
public:
  NeedsShiftError(const std::string& what, long shift)
      : Error(what), shift_(shift) {}
  long shift() const { return shift_; }

private:
  long shift_;
};

/// Raised when a function-field element has no inverse requested of it.
class NotInvertibleError : public Error {
public:
  using Error::Error;
};

/// Raised when a claimed quadric fails the membership identity.
class NotInI2Error : public Error {
public:
  using Error::Error;
};

/// Raised when section products do not lie in the span of the canonical basis.
class NotAdjointError : public Error {
public:
  using Error::Error;
};

/// Raised when a modular reduction hits a prime dividing some denominator.
class BadPrimeError : public Error {
public:
  using Error::Error;
};

/// Raised when two sections handed to a Wronskian are linearly dependent.
class DependentSectionsError : public Error {
public:
  using Error::Error;
};

/// Raised when an internal cross-check fails; always indicates a bug, never
/// bad user input.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace gaussmap
