#pragma once

#include <stdexcept>
#include <string>

namespace bautin {

// Caller violated an operation's precondition (degree mismatch, wrong mode, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed vector-field text.  line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A parametrization left its admissible region (negative radicand, zero denominator).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An outcome the mathematics rules out: inconsistent or singular chain systems,
// root brackets without a sign change.  Always a bug or a corrupted constant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A floating result did not reach the accuracy the caller asked for.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bautin
