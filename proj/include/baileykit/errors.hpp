#pragma once

#include <stdexcept>
#include <string>

namespace baileykit {

class ZeroSeriesInversion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product or sum whose terms do not gain t-valuation, so no truncation is exact.
class FormalDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedShift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdentity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace baileykit
