#pragma once

#include <stdexcept>
#include <string>

namespace tcand {

// Input text could not be parsed. line is 1-based, 0 when not line-specific.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_num, const std::string& msg)
      : std::runtime_error(line_num > 0 ? "line " + std::to_string(line_num) + ": " + msg
                                        : msg),
        line(line_num) {}
};

// Well-formed input that violates an operation's precondition (wrong depth,
// instance too large for an exact solver, non-simple FDs, degree above the
// coloring bound, malformed instance data, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// No solution exists: targets not derivable from the full attribute set, or
// blue elements not coverable by any set.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A postcondition the solver relies on failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tcand
