#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Exact division left a nonzero remainder. The remainder is kept in canonical text form.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(std::string remainder)
      : Error("polynomial division is not exact, remainder " + remainder),
        remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

/// The exact backend could not split a polynomial into linear factors.
class RootsUnavailable : public Error {
 public:
  using Error::Error;
};

/// Numeric classification of a root difference as integer / non-integer is not decisive.
class AmbiguousShift : public Error {
 public:
  using Error::Error;
};

/// z0 was expected to be a zero of the polynomial.
class NotAZero : public Error {
 public:
  using Error::Error;
};

class SamplingBudgetExhausted : public Error {
 public:
  explicit SamplingBudgetExhausted(std::size_t attempts)
      : Error("sampling budget exhausted after " + std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}
  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

/// Syntax error with the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Two independent computations of the same quantity disagreed.
class InconsistentResult : public Error {
 public:
  using Error::Error;
};

}  // namespace fdcalc
