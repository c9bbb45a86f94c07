#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A Gröbner step, degree or transcript cap was hit. Never a wrong answer:
/// the caller may retry with larger budgets.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed or invalid input text. `where` names the field (or file) and
/// `column` is 1-based inside the offending string, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(std::string message, std::string where = {}, std::size_t column = 0)
      : Error(compose(message, where, column)), where_(std::move(where)), column_(column) {}

  const std::string& where() const noexcept { return where_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string compose(const std::string& message, const std::string& where,
                             std::size_t column) {
    std::string out;
    if (!where.empty()) out += where + ": ";
    out += message;
    if (column != 0) out += " (column " + std::to_string(column) + ")";
    return out;
  }

  std::string where_;
  std::size_t column_;
};

class RingMismatch : public Error {
public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class SizeMismatch : public Error {
public:
  using Error::Error;
};

class NotAlternating : public Error {
public:
  using Error::Error;
};

/// Raised where an inverse is structurally required (e.g. a WittRep whose
/// Pfaffian is not a unit). Definite "not a unit" answers are returned as
/// empty optionals instead.
class NotInvertible : public Error {
public:
  using Error::Error;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

}  // namespace wittkit
