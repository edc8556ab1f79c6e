#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dipair {

// Failures caused by malformed input text (JSON, point syntax, builtin names).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Base for failures of a computation's precondition on well-formed input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopsPresent : public DomainError {
 public:
  LoopsPresent()
      : DomainError("complex has a non-trivial directed loop; hom-sets would be infinite") {}
};

class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(std::uint64_t count)
      : DomainError("path budget exceeded after " + std::to_string(count) + " paths"),
        count_(count) {}

  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_;
};

class UniquePathViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAGraph : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace dipair
