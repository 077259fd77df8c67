#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kxcover {

// Every error carries the process exit code the CLI reports for it.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed input file or command line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what, 2) {}
};

/// Vector lengths that do not match the graph they index.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what, 2) {}
};

/// Input is well-formed but outside the hypothesis of the requested operation.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what, 3) {}
};

/// A search or sampling budget ran out before an exact answer was reached.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t best_found,
                 std::int64_t upper_bound)
      : Error(what, 4), best_found_(best_found), upper_bound_(upper_bound) {}
  std::int64_t best_found() const noexcept { return best_found_; }
  std::int64_t upper_bound() const noexcept { return upper_bound_; }

 private:
  std::int64_t best_found_;
  std::int64_t upper_bound_;
};

/// An invariant that optimality guarantees should have made impossible.
class InternalContradiction : public Error {
 public:
  explicit InternalContradiction(const std::string& what) : Error(what, 5) {}
};

}  // namespace kxcover
