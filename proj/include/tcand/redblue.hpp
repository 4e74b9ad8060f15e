#pragma once

#include <vector>

#include "tcand/fd.hpp"

namespace tcand {

// Red-blue set cover instance: elements [0, num_elements) partitioned into
// reds and blues; choose sets covering every blue while touching the fewest
// reds.
struct RBSCInstance {
  int num_elements = 0;
  AttrSet reds;
  AttrSet blues;
  std::vector<AttrSet> sets;

  void validate() const;  // throws PreconditionError on malformed data
};

// Reduction of a depth-1 TCAND instance to RBSC. Reds are the original
// attributes (same ids); each target t gets a fresh blue element. Every FD
// into a target becomes the set lhs + {blue(t)}, and every target also gets
// the singleton choice set {t, blue(t)}.
struct TcandToRbsc {
  RBSCInstance rbsc;
  std::vector<int> blue_of_target;  // target attr -> blue element id, -1 otherwise
  std::vector<int> set_fd;          // set index -> FD index, or -1 for a singleton choice set
};

TcandToRbsc tcand_to_rbsc(const Instance& inst);

// Reduction of RBSC to depth-1 TCAND: attributes are the elements (same ids)
// plus guard copies of each blue. A blue's target group holds one attribute
// more than the cheapest red cost of any single set covering it, so picking
// the whole group is always beaten by deriving it; every set S then yields
// the FD (S and reds) -> g for each group member g of each blue in S. This
// prices "just pick the target" out of the optimum, which is what makes the
// optimal values on both sides agree exactly.
struct RbscToTcand {
  Instance instance;
  std::vector<std::vector<int>> group_of;  // element -> its target attrs (blues only)
};

RbscToTcand rbsc_to_tcand(const RBSCInstance& rb);

struct RbscSolution {
  std::vector<int> chosen;  // set indices in pick order
  int red_cost = 0;         // distinct reds touched by the chosen sets
};

// Ratio-greedy cover: repeatedly take the set maximizing
// (new blues covered) / (new reds incurred), where zero new reds counts as an
// infinite ratio; tie-break lowest index.
RbscSolution rbsc_greedy(const RBSCInstance& rb);

// Reds touched by a collection of sets.
int rbsc_cost(const RBSCInstance& rb, const std::vector<int>& chosen);

// True iff the chosen sets cover every blue.
bool rbsc_covers(const RBSCInstance& rb, const std::vector<int>& chosen);

}  // namespace tcand
