#pragma once

#include <stdexcept>
#include <string>

namespace qspair {

// Base class for all errors raised by the engine. Everything thrown on
// purpose derives from this; anything else escaping is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Scalar evaluation hit a zero denominator.
struct PoleError : Error {
  explicit PoleError(const std::string& what) : Error(what) {}
};

// Division by zero or inversion of a non-invertible element.
struct DivisionError : Error {
  explicit DivisionError(const std::string& what) : Error(what) {}
};

// Rewriting-system completion needed a rule beyond the configured degree cap,
// or normalization produced a word beyond the hard block-length limit.
struct DegreeCapError : Error {
  explicit DegreeCapError(const std::string& what) : Error(what) {}
};

// A check exceeded its configured term-count ceiling or wall-clock budget.
// Runners convert this into a "skipped" verdict; it must never be swallowed
// into a pass/fail answer.
struct BudgetExceeded : Error {
  enum class Kind { Terms, Time };
  BudgetExceeded(Kind k, const std::string& what) : Error(what), kind(k) {}
  Kind kind;
};

// Malformed input expression or configuration.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace qspair
