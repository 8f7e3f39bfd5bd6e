#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

// Base class for all workbench errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed quiver/relation/DSL input.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Enumeration exceeded its node budget.
struct BudgetError : Error {
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// The prime is too small for an exact computation (endomorphism radical
// via the trace form needs p to exceed the relevant dimensions).
struct FieldError : Error {
  explicit FieldError(const std::string& msg) : Error(msg) {}
};

// An internal invariant failed (e.g. a mutation with no unique completion).
struct InvariantError : Error {
  explicit InvariantError(const std::string& msg) : Error(msg) {}
};

}  // namespace tautilt
