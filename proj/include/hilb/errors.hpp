#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

// Base of every error raised by the engine. Anything else escaping the
// library is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A specialized tangent weight vanished; the caller should resample.
class DegenerateSpecialization : public Error {
 public:
  using Error::Error;
};

// Integrand degree exceeds the dimension of the Hilbert scheme.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class SpecializationExhausted : public Error {
 public:
  using Error::Error;
};

// The two specializations of one integral disagreed. Mathematically
// impossible for a well-formed integrand, so it flags an implementation bug.
class SpecializationMismatch : public Error {
 public:
  using Error::Error;
};

class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

// Argument outside the range where a formula is established.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateDatum : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace hilb
