#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cda {

// Violation of an internal contract (duplicate keys, invalid parameters).
// These indicate a caller bug, never bad input data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DuplicateKeyError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// Malformed input file. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cda
