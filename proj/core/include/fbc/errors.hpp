#pragma once

#include <stdexcept>
#include <string>

namespace fbc {

/// Invalid argument to a library operation (dimension mismatch, out-of-range k, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed-form bound was evaluated outside the range where it is proven.
class ApplicabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input file. line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fbc
