#pragma once

#include <stdexcept>
#include <string>

namespace combsub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (1+z)^k does not divide the symbol.
class NonDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

// Precondition violations on the scheme or the data; the CLI maps these to exit code 4.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BadIndex : public DomainError {
 public:
  using DomainError::DomainError;
};

class TooFewPoints : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonNumericAlpha : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace combsub
