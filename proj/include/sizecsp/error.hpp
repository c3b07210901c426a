#pragma once

#include <stdexcept>
#include <string>

namespace sizecsp {

// Thrown when an input exceeds one of the desk-scale limits (domain size,
// arity, k, number of variables, enumeration budgets).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or validation error in one of the text formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A solver was asked to run the FPT algorithm on a language that the
// classification marks as hard.
class HardLanguageError : public std::logic_error {
 public:
  explicit HardLanguageError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sizecsp
