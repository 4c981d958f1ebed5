#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cdelab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad scalar text, bad JSON, invalid
// structure constants. The CLI maps these to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SchemaError : public InputError {
 public:
  SchemaError(const std::string& message, std::string pointer)
      : InputError(message + " (at " + (pointer.empty() ? "/" : pointer) + ")"),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

class DivisionByZeroError : public InputError {
 public:
  using InputError::InputError;
};

class NonIntegralError : public InputError {
 public:
  using InputError::InputError;
};

class AssociativityError : public InputError {
 public:
  AssociativityError(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
      : InputError("associativity fails at (i,j,k,l) = (" + std::to_string(i + 1) +
                   "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                   std::to_string(l + 1) + ")"),
        i_(i), j_(j), k_(k), l_(l) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }

 private:
  std::size_t i_, j_, k_, l_;
};

class UnitLawError : public InputError {
 public:
  using InputError::InputError;
};

class RepresentationError : public InputError {
 public:
  using InputError::InputError;
};

class NotIdempotentError : public InputError {
 public:
  using InputError::InputError;
};

class SeedsDoNotSpanError : public InputError {
 public:
  using InputError::InputError;
};

class WeightOutsideWindowError : public InputError {
 public:
  using InputError::InputError;
};

class CongruenceViolationError : public InputError {
 public:
  using InputError::InputError;
};

class IncompleteSimplesError : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical consistency check failed. Exit status 3.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

class NonIntegralSolutionError : public AuditFailure {
 public:
  using AuditFailure::AuditFailure;
};

// The input is well formed but outside what the library handles. Exit status 4.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class NonSplitError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class DegenerateParameterError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdelab
