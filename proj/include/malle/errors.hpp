#pragma once

#include <stdexcept>
#include <string>

namespace malle {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input whose values are unacceptable (missing weights, arity mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (non-normal kernel, non-abelian witness, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// The caller asked for a result that only holds under a hypothesis the input does not meet.
class UnsupportedHypothesis : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// A configured size cap was exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace malle
