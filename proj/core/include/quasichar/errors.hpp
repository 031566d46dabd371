#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quasichar {

/// Malformed input: bad matrix file, zero column, invalid family id, index out of range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused to start because its planned work exceeds a budget.
/// Carries the estimate so callers can raise the budget deliberately.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, long double planned, long double budget)
      : std::runtime_error(what), planned_(planned), budget_(budget) {}

  long double planned() const noexcept { return planned_; }
  long double budget() const noexcept { return budget_; }

 private:
  long double planned_;
  long double budget_;
};

/// An internal consistency check failed (wrong period, disagreeing paths, ...).
/// Never swallowed: it signals a bug or a wrong seed.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A function was called outside its documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quasichar
