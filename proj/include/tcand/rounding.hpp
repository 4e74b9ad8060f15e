#pragma once

#include <cstdint>
#include <vector>

#include "tcand/fd.hpp"

namespace tcand {

// Intersection graph of the left sides that can derive one target, plus a
// virtual singleton {t} standing for picking the target itself.
struct MetaGraph {
  int target = 0;
  std::vector<AttrSet> nodes;            // left sides, first appearance; {t} last
  int virtual_node = 0;                  // index of the {t} node
  std::vector<std::vector<int>> adj;     // adjacency: nodes with intersecting sets

  int max_degree() const;
};

MetaGraph build_meta_graph(int target, const FDSet& fds);

struct Coloring {
  std::vector<int> color;                // node -> class in [0, k]
  int num_classes = 0;
  std::vector<int> class_sizes;
};

// Proper coloring into k+1 classes whose sizes differ by at most one
// (guaranteed to exist when every degree is at most k). Greedy coloring
// followed by chain rebalancing; deterministic for a fixed input.
Coloring equitable_coloring(const std::vector<std::vector<int>>& adj, int k);

// (f+1)^D-approximation: keep the attributes whose bottom-layer LP value
// reaches 1/(f+1)^D. Output is always feasible.
AttrSet round_deterministic(const Instance& inst);

// Deterministic part of the one-round randomized rounding, reusable across
// seeds: LP solution, per-target colored meta-graph, the color class with
// enough z-mass, and the coin parameters.
struct RandomizedPlan {
  int n = 0;
  int delta = 0;          // degree bound used for the colorings
  int coins = 0;          // tosses per candidate attribute
  double lp_objective = 0;
  struct TargetPlan {
    int target = 0;
    std::vector<int> candidates;         // attrs of the chosen color class
    std::vector<double> probs;           // matching success probabilities
  };
  std::vector<TargetPlan> targets;
};

RandomizedPlan make_randomized_plan(const Instance& inst, double oversample = 2.0);

// One Monte-Carlo draw; each (target, attribute) pair has its own derived
// stream, so draws are reproducible and order-independent. Feasibility is not
// guaranteed; callers check and retry with fresh seeds.
AttrSet sample_randomized(const RandomizedPlan& plan, uint64_t seed);

// Plan + one draw for depth-1 instances.
AttrSet round_randomized(const Instance& inst, uint64_t seed, double oversample = 2.0);

// Layer-by-layer randomized rounding at depth D; at D = 1 this is exactly
// round_randomized.
AttrSet round_randomized_d(const Instance& inst, uint64_t seed, double oversample = 2.0);

}  // namespace tcand
