#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uavwpt {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. K(s) at s >= 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Coil geometry for which a formula is invalid (winding radius not larger than wire radius).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Coincident or touching filaments.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// |M| >= sqrt(L1 L2).
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed to converge. Carries the best estimate it reached.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

class BracketingError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class SafetyError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConversionError : public Error {
 public:
  using Error::Error;
};

class ExtractionError : public Error {
 public:
  using Error::Error;
};

class ReportError : public Error {
 public:
  using Error::Error;
};

}  // namespace uavwpt
