#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tcand/fd.hpp"
#include "tcand/parse.hpp"

namespace tcand {

// Layered instance with integrality gap 2^D: D+1 layers of g attributes; the
// pairs of each layer are dealt round-robin as FD left sides onto the next
// layer, and the top layer is the target set. Attribute (i, r) of layer r has
// id r*g + i and name "x{i}r{r}".
NamedInstance gen_gap_instance(int g, int depth);

// Depth-1 instance equivalent to vertex cover: one attribute per vertex, one
// target attribute per edge, and FD {u, v} -> edge(u, v). Vertices are named
// "v{i}", edges "e{u}_{v}". Edges are deduped; self-loops are rejected.
NamedInstance gen_vc_instance(int num_vertices, std::vector<std::pair<int, int>> edges);

// Random instance: m left sides with 1..max_lhs attributes drawn without
// replacement, right side outside the left side, each attribute a target with
// probability target_fraction, full inference depth. Duplicate draws collapse
// during normalization, so the FD count can come out below m. Deterministic
// for a fixed seed.
NamedInstance gen_random_instance(int n, int m, int max_lhs, double target_fraction,
                                  uint64_t seed);

}  // namespace tcand
