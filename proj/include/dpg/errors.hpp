#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpg {

/// Malformed or inconsistent arguments (not a matching, not a partition, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that could not be parsed. Carries the 1-based line number.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A criterion was asked about a graph outside its hypothesis.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search or enumeration hit its configured resource ceiling.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scripted strategy was handed a seed outside its declared family.
class FamilyMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace dpg
