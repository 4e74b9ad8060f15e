#include "tcand/gen.hpp"

#include <algorithm>
#include <string>

#include "tcand/errors.hpp"
#include "tcand/rng.hpp"

namespace tcand {

NamedInstance gen_gap_instance(int g, int depth) {
  if (g < 3) throw PreconditionError("gap instance needs a layer width of at least 3");
  if (depth < 1) throw PreconditionError("gap instance needs depth >= 1");
  const int n = g * (depth + 1);

  NamedInstance ni;
  ni.names.resize(n);
  for (int r = 0; r <= depth; ++r)
    for (int i = 0; i < g; ++i)
      ni.names[r * g + i] = "x" + std::to_string(i) + "r" + std::to_string(r);

  // Circulant dealing: column k of layer r+1 is determined by the pairs
  // {k-j, k} (mod g) of layer r for j = 1..floor((g-1)/2), plus for even g
  // the diameter pair {k-g/2, k} for the upper half of the columns. Every
  // pair serves exactly one column, counts are balanced within one, and all
  // pairs feeding column k contain attribute k itself — dropping k from a
  // layer therefore strands column k of the next layer, which is what makes
  // any integral solution pay for a full layer.
  std::vector<RawFD> raw;
  for (int r = 0; r < depth; ++r)
    for (int k = 0; k < g; ++k) {
      int spokes = (g - 1) / 2 + (g % 2 == 0 && k >= g / 2 ? 1 : 0);
      for (int j = 1; j <= spokes; ++j) {
        RawFD fd{AttrSet(n), AttrSet(n)};
        fd.lhs.set(r * g + (k - j + g) % g);
        fd.lhs.set(r * g + k);
        fd.rhs.set((r + 1) * g + k);
        raw.push_back(std::move(fd));
      }
    }
  ni.instance.fds = normalize(n, raw);
  ni.instance.targets = AttrSet(n);
  for (int i = 0; i < g; ++i) ni.instance.targets.set(depth * g + i);
  ni.instance.rounds = depth;
  return ni;
}

NamedInstance gen_vc_instance(int num_vertices, std::vector<std::pair<int, int>> edges) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw PreconditionError("self-loop in vertex cover instance");
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw PreconditionError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const int n = num_vertices + static_cast<int>(edges.size());
  NamedInstance ni;
  ni.names.resize(n);
  for (int i = 0; i < num_vertices; ++i) ni.names[i] = "v" + std::to_string(i);

  // One FD per endpoint: either end of an edge determines the edge variable,
  // exactly like either end suffices to cover the edge. This keeps the FD
  // fan-in at two and makes the optimum coincide with the minimum vertex
  // cover; a joint left side {u, v} would instead demand both endpoints.
  std::vector<RawFD> raw;
  for (size_t e = 0; e < edges.size(); ++e) {
    int id = num_vertices + static_cast<int>(e);
    ni.names[id] =
        "e" + std::to_string(edges[e].first) + "_" + std::to_string(edges[e].second);
    for (int endpoint : {edges[e].first, edges[e].second}) {
      RawFD fd{AttrSet(n), AttrSet(n)};
      fd.lhs.set(endpoint);
      fd.rhs.set(id);
      raw.push_back(std::move(fd));
    }
  }
  ni.instance.fds = normalize(n, raw);
  ni.instance.targets = AttrSet(n);
  for (int id = num_vertices; id < n; ++id) ni.instance.targets.set(id);
  ni.instance.rounds = n > 0 ? 1 : 0;
  return ni;
}

NamedInstance gen_random_instance(int n, int m, int max_lhs, double target_fraction,
                                  uint64_t seed) {
  if (n < 1) throw PreconditionError("random instance needs n >= 1");
  if (m < 0) throw PreconditionError("negative FD count");
  if (max_lhs < 1 || max_lhs > n)
    throw PreconditionError("max_lhs out of range [1, n]");
  if (m > 0 && n < 2)
    throw PreconditionError("FDs need n >= 2 so the right side can avoid the left");
  if (target_fraction < 0 || target_fraction > 1)
    throw PreconditionError("target_fraction out of range [0, 1]");

  Rng rng(seed);
  std::vector<RawFD> raw;
  std::vector<int> scratch(n);
  for (int k = 0; k < m; ++k) {
    int len = 1 + static_cast<int>(rng.next_below(std::min(max_lhs, n - 1)));
    for (int i = 0; i < n; ++i) scratch[i] = i;
    RawFD fd{AttrSet(n), AttrSet(n)};
    for (int i = 0; i < len; ++i) {  // partial Fisher-Yates draw without replacement
      int j = i + static_cast<int>(rng.next_below(n - i));
      std::swap(scratch[i], scratch[j]);
      fd.lhs.set(scratch[i]);
    }
    for (;;) {
      int rhs = static_cast<int>(rng.next_below(n));
      if (!fd.lhs.test(rhs)) {
        fd.rhs.set(rhs);
        break;
      }
    }
    raw.push_back(std::move(fd));
  }

  NamedInstance ni;
  ni.names = default_names(n);
  ni.instance.fds = normalize(n, raw);
  ni.instance.targets = AttrSet(n);
  for (int i = 0; i < n; ++i)
    if (rng.next_bernoulli(target_fraction)) ni.instance.targets.set(i);
  ni.instance.rounds = n;
  return ni;
}

}  // namespace tcand
