#pragma once

#include <stdexcept>
#include <string>

namespace fcs {

// Base for everything this library throws on purpose. The `where` tag names the
// module that raised it so CLI error envelopes stay uniform.
class Error : public std::runtime_error {
public:
  Error(std::string where, const std::string& what)
      : std::runtime_error("[" + where + "] " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

// Violated mathematical precondition: bad table, unrealizable quintuple,
// degenerate relation, and so on. Messages carry a concrete witness.
class DomainError : public Error {
public:
  using Error::Error;
};

// Integer overflow in exponent or matrix arithmetic. Reported, never wrapped.
class OverflowError : public DomainError {
public:
  using DomainError::DomainError;
};

// A configured resource budget was hit (rule count, word length, table size).
class BudgetError : public Error {
public:
  using Error::Error;
};

// Malformed input text: presentation, table, matrix, frame, implication files.
class ParseError : public Error {
public:
  ParseError(std::string where, const std::string& what, std::size_t line = 0)
      : Error(std::move(where),
              line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace fcs
