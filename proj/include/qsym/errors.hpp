#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (table mismatch, out-of-range parameter).
class usage_error : public error {
 public:
  using error::error;
};

/// Substitution asked for the inverse of a non-invertible image.
class substitution_error : public error {
 public:
  using error::error;
};

/// Evaluation hit a pole (zero assigned to a negatively-exponented variable).
class evaluation_error : public error {
 public:
  using error::error;
};

/// Text input did not conform to the polynomial grammar.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line, int column)
      : error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An internal invariant failed (e.g. an integrality assertion); always a bug.
class invariant_error : public error {
 public:
  using error::error;
};

}  // namespace qsym
