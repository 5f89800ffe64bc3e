#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cesr {

// Base for every error the library raises. Property verdicts are never
// errors; these signal misuse or unmet preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between values of different coefficient domains (or moduli).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation is not met (non-associative base,
// missing identity, non-cancellative input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A construction or search would exceed a size or time cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Generators passed to Light's test do not generate the carrier.
class NotGeneratingSet : public Error {
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

}  // namespace cesr
