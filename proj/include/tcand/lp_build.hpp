#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tcand/fd.hpp"
#include "tcand/lp.hpp"

namespace tcand {

// Layered relaxation of depth-D derivation. Layers d run from n-D (the picked
// set, the only layer with objective weight) to n (where targets are fixed to
// 1). x_i^d may exceed x_i^{d-1} only by the z-mass of FDs into i, and each
// z_LS^d is capped by every x_j^{d-1} with j in LS. z-variables are shared
// across FDs with the same left side within a layer.
struct LayeredLP {
  LPModel model;
  int n = 0, rounds = 0;
  bool pruned = true;
  std::vector<AttrSet> ls;                     // distinct left sides, first appearance
  std::vector<std::vector<int>> ls_of;         // attr -> indices into ls of FDs into it
  std::vector<int> x;                          // layer-major x var ids, -1 when pruned
  std::map<std::pair<int, int>, int> z;        // (ls index, layer d) -> var id

  int bottom() const { return n - rounds; }
  // d in [bottom(), n]; -1 when the variable was pruned away.
  int x_var(int i, int d) const;
  // d in [bottom()+1, n]; -1 when absent.
  int z_var(int ls_idx, int d) const;
};

// When prune is set, variables are restricted to the attributes that can
// influence a target within the remaining rounds; optima are unchanged.
LayeredLP build_layered_lp(const Instance& inst, bool prune = true);

// Single-round covering relaxation: every attribute gets a unit-cost y, every
// left side of an FD into a target gets a z capped by its members' y values,
// and each target t needs y_t plus its incoming z-mass to reach 1.
struct OneRoundLP {
  LPModel model;
  int n = 0;
  std::vector<AttrSet> ls;                     // left sides of FDs into targets
  std::vector<int> y;                          // attr -> var id
  std::vector<int> z;                          // ls index -> var id
  std::vector<std::vector<int>> ls_of_target;  // attr -> indices into ls (empty if not a target)
};

OneRoundLP build_one_round_lp(const Instance& inst);

// Optimal value of the (pruned) layered relaxation: a lower bound on the
// optimal solution size at the instance's depth.
double lp_lower_bound(const Instance& inst);

}  // namespace tcand
