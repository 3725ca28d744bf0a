#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starmap {

/// Input violates a documented precondition (size mismatch, malformed object, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive sweep was asked to go beyond its configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int requested, int limit)
      : std::runtime_error(what + ": n=" + std::to_string(requested) +
                           " exceeds budget " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

/// An exact computation produced a value that should have been integral (or
/// otherwise consistent) and was not. Never recovered from silently.
class Inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed serialized text. `where` is a byte offset for syntax errors or a
/// JSON pointer for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string where)
      : std::runtime_error(what + " (at " + where + ")"), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace starmap
