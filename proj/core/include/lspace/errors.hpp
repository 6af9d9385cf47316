#pragma once

#include <stdexcept>
#include <string>

namespace lspace {

// Every failure raised by the library derives from Error. The CLI maps the
// three concrete kinds onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An operation was called outside its domain (grade mismatch, i == j,
// singular minor, bound exceeded, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed. Always indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lspace
