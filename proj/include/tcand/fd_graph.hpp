#pragma once

#include <string>
#include <vector>

#include "tcand/fd.hpp"

namespace tcand {

// Directed graph over attributes with one edge i -> j per FD whose left side
// contains i and whose right side is j. Edges are deduped and sorted.
struct FDGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

FDGraph build_fd_graph(const FDSet& fds);

// True iff every left side has exactly one attribute.
bool is_simple(const FDSet& fds);

// Strongly connected components of an FDGraph, plus the condensation DAG and
// full reachability per component (a component always reaches itself).
struct CondensedGraph {
  int n = 0;
  std::vector<AttrSet> components;        // partition of [0, n)
  std::vector<int> comp_of;               // attr -> component id
  std::vector<std::vector<int>> dag;      // deduped component edges
  std::vector<AttrSet> reach;             // attrs reachable from each component
  std::vector<int> sources;               // components with no incoming edge
};

CondensedGraph scc_condense(const FDGraph& g);

// Classic greedy cover: repeatedly pick the set covering the most uncovered
// elements, tie-break lowest index; returns chosen indices in pick order.
// Throws InfeasibleError when the sets cannot cover the universe.
std::vector<int> greedy_set_cover(const AttrSet& universe, const std::vector<AttrSet>& sets);

// ln(s)-approximation for simple FDs via the condensation: candidate sets are
// the reach sets of source components, restricted to targets and filtered to
// maximal ones; one representative attribute per chosen component.
// Requires is_simple(inst.fds) and full inference depth (rounds = n).
AttrSet solve_simple(const Instance& inst);

std::string to_dot(const FDGraph& g, const std::vector<std::string>& names = {});
std::string to_dot(const CondensedGraph& cg, const std::vector<std::string>& names = {});

}  // namespace tcand
