#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bm {

// Text or file input that does not match the documented grammar.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line != 0 ? "line " + std::to_string(line) + ": " + what
                                     : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structural corruption in data that claims to be a validated relation
// (e.g. a corner lookup with zero or multiple matches).
class CorruptRelation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured solution or memory budget was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input square, word or relation does not live in the expected ambient (alpha,beta).
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A built level fails the disjointness cardinality check; the input level
// was not a complete valid level.
class LevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bm
