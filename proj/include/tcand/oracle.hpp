#pragma once

#include "tcand/fd.hpp"
#include "tcand/redblue.hpp"

namespace tcand {

// Exact solvers refuse instances above this size; they enumerate subsets.
inline constexpr int kMaxExactAttrs = 24;
inline constexpr int kMaxExactSets = 24;

// Minimum-cardinality X with every target derivable from X within
// inst.rounds steps. Enumerates candidate subsets cardinality-major,
// lexicographic-minor, so the answer is the lexicographically least optimum.
// Candidates are attributes that occur in some left side or are targets.
// Throws PreconditionError when inst.n() > kMaxExactAttrs, InfeasibleError
// when even the full attribute set does not work.
AttrSet exact_tcand(const Instance& inst);

// Minimum red-cost cover of all blues. Ties prefer fewer sets, then the
// lexicographically least index vector. Throws PreconditionError when
// |sets| > kMaxExactSets, InfeasibleError when the blues are not coverable.
RbscSolution exact_rbsc(const RBSCInstance& rb);

}  // namespace tcand
