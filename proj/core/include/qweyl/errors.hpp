#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Invalid arguments: malformed specs, mismatched fields or algebras,
/// out-of-range generator indices.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inversion or division by an exact zero.
class ZeroDivisorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value outside the locus where an operation is defined
/// (e.g. a point with 1 + p_i w_i = 0, a singular Euler matrix).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal postcondition failed. Never expected on valid input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qweyl
