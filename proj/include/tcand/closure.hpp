#pragma once

#include <cstddef>

#include "tcand/fd.hpp"

namespace tcand {

// One parallel application of every FD whose left side is contained in x.
AttrSet one_step_closure(const AttrSet& x, const FDSet& fds);

// Work counters for the linear-time closure; each FD's left-side counter is
// decremented at most |lhs| times, so lhs_decrements is bounded by the total
// size of all left sides.
struct ClosureWork {
  std::size_t lhs_decrements = 0;
};

// Least fixpoint of x under fds, via unsatisfied-counter propagation.
AttrSet closure(const AttrSet& x, const FDSet& fds, ClosureWork* work = nullptr);

// Fixpoint truncated to at most `rounds` parallel steps.
AttrSet bounded_closure(const AttrSet& x, const FDSet& fds, int rounds);

// True iff every target is derivable from x within inst.rounds steps.
bool is_feasible(const AttrSet& x, const Instance& inst);

}  // namespace tcand
