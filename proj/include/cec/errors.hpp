#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cec {

// Base for every error raised by the library. The CLI maps the subclasses
// onto exit codes (2 for input problems, 3 for resource limits).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Reason { syntax, loop_edge, vertex_out_of_range, duplicate_edge, edge_count };

  ParseError(Reason reason, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), reason_(reason), line_(line) {}

  Reason reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Reason reason_;
  std::size_t line_;
};

// The oracle refuses graphs with more edges than its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The engine ran out of memo entries or recursion steps.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant, e.g. a negative count from an alternating sum.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cec
