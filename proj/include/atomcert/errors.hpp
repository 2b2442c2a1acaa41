#pragma once

#include <stdexcept>
#include <string>

namespace atomcert {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed `.gauss` input. Carries a 1-based position when known.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, int line, int col)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  explicit parse_error(const std::string& msg) : error(msg) {}

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_ = 0;
  int col_ = 0;
};

// A cost guard refused the operation. Overridable by the caller (`--force`).
class guard_error : public error {
 public:
  using error::error;
};

// An internal consistency check failed (e.g. d^2 != 0). Must never fire.
class invariant_error : public error {
 public:
  using error::error;
};

}  // namespace atomcert
