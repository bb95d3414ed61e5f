#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optrepair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mutually inconsistent input (undeclared predicate, arity
// mismatch, unsafe rule, invalid priority, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& message)
      : InputError(source + ":" + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An exhaustive enumeration would exceed the configured limits.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Budget {
  // cap on the number of facts (or actions) an exponential enumeration ranges over
  std::size_t max_universe = 22;
  std::size_t max_completions = 1'000'000;
};

}  // namespace optrepair
