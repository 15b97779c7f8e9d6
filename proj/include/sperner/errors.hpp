#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sperner {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

struct NotRegularSequence : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

/// A precondition of a theorem-driven routine does not hold
/// (non-unimodal Hilbert function, unverified matching property, ...).
struct HypothesisViolated : Error {
  using Error::Error;
};

/// A computed counterexample to a statement that is a theorem. Always an
/// implementation bug signal; never caught and absorbed silently.
struct Falsification : Error {
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sperner
