#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frieze {

// Malformed arguments: short sequences, nonpositive entries, bad ranges.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but is not a quiddity sequence.
class NotAQuiddity : public std::domain_error {
 public:
  explicit NotAQuiddity(const std::string& what) : std::domain_error(what) {}
};

// Raised by frieze generation when the diamond rule cannot be applied
// (zero divisor or inexact division).
class FriezeCellError : public NotAQuiddity {
 public:
  FriezeCellError(int row, std::size_t column, const std::string& what)
      : NotAQuiddity(what), row_(row), column_(column) {}

  int row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  int row_;
  std::size_t column_;
};

class ContractionImpossible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAPositiveTiling : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InconsistentFactors : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration requested beyond the configured bound.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace frieze
