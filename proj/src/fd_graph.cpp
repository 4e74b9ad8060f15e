#include "tcand/fd_graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"

namespace tcand {

FDGraph build_fd_graph(const FDSet& fds) {
  FDGraph g;
  g.n = fds.n;
  g.adj.assign(g.n, {});
  for (const FD& fd : fds.fds)
    fd.lhs.for_each([&](int i) { g.adj[i].push_back(fd.rhs); });
  for (auto& out : g.adj) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

bool is_simple(const FDSet& fds) {
  for (const FD& fd : fds.fds)
    if (fd.lhs.count() != 1) return false;
  return true;
}

CondensedGraph scc_condense(const FDGraph& g) {
  CondensedGraph cg;
  cg.n = g.n;
  cg.comp_of.assign(g.n, -1);

  // Iterative Tarjan; components come out sinks-first (reverse topological).
  std::vector<int> index(g.n, -1), low(g.n, 0), stack;
  std::vector<bool> on_stack(g.n, false);
  int next_index = 0;
  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < g.n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < g.adj[f.v].size()) {
        int w = g.adj[f.v][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          int cid = static_cast<int>(cg.components.size());
          AttrSet comp(g.n);
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.set(w);
            cg.comp_of[w] = cid;
            if (w == v) break;
          }
          cg.components.push_back(std::move(comp));
        }
      }
    }
  }

  const int c = static_cast<int>(cg.components.size());
  cg.dag.assign(c, {});
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      if (cg.comp_of[v] != cg.comp_of[w]) cg.dag[cg.comp_of[v]].push_back(cg.comp_of[w]);
  for (auto& out : cg.dag) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  // Successor components have smaller ids (emitted earlier), so a single
  // ascending sweep is a reverse-topological DP.
  cg.reach.assign(c, AttrSet(g.n));
  for (int cid = 0; cid < c; ++cid) {
    cg.reach[cid] = cg.components[cid];
    for (int succ : cg.dag[cid]) {
      assert(succ < cid);
      cg.reach[cid] |= cg.reach[succ];
    }
  }

  std::vector<int> indeg(c, 0);
  for (int cid = 0; cid < c; ++cid)
    for (int succ : cg.dag[cid]) ++indeg[succ];
  for (int cid = 0; cid < c; ++cid)
    if (indeg[cid] == 0) cg.sources.push_back(cid);
  return cg;
}

std::vector<int> greedy_set_cover(const AttrSet& universe,
                                  const std::vector<AttrSet>& sets) {
  AttrSet all(universe.universe_size());
  for (const AttrSet& s : sets) all |= s;
  if (!universe.is_subset_of(all))
    throw InfeasibleError("universe not coverable by the given sets");

  std::vector<int> chosen;
  AttrSet uncovered = universe;
  while (!uncovered.empty()) {
    int best = -1, best_gain = 0;
    for (size_t s = 0; s < sets.size(); ++s) {
      int gain = sets[s].intersect_count(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(s);
      }
    }
    chosen.push_back(best);
    uncovered.subtract(sets[best]);
  }
  return chosen;
}

AttrSet solve_simple(const Instance& inst) {
  inst.validate();
  if (!is_simple(inst.fds))
    throw PreconditionError("FD set is not simple (a left side has size != 1)");
  if (inst.rounds != inst.n())
    throw PreconditionError("simple solver needs full inference depth (rounds = n)");

  const int n = inst.n();
  CondensedGraph cg = scc_condense(build_fd_graph(inst.fds));

  // Candidate components: DAG sources. In a DAG every component is reachable
  // from some source, but unreached targets would get their own components
  // appended here as a safety net.
  std::vector<int> cand = cg.sources;
  {
    AttrSet reachable(n);
    for (int cid : cand) reachable |= cg.reach[cid];
    AttrSet missed = inst.targets;
    missed.subtract(reachable);
    missed.for_each([&](int t) {
      int cid = cg.comp_of[t];
      if (std::find(cand.begin(), cand.end(), cid) == cand.end()) cand.push_back(cid);
    });
  }

  // Keep only maximal covering sets; on equality the earlier candidate wins.
  std::vector<AttrSet> covers;
  covers.reserve(cand.size());
  for (int cid : cand) covers.push_back(cg.reach[cid] & inst.targets);
  std::vector<int> keep;
  for (size_t i = 0; i < cand.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cand.size() && !dominated; ++j) {
      if (i == j || !covers[i].is_subset_of(covers[j])) continue;
      if (covers[i] != covers[j] || j < i) dominated = true;
    }
    if (!dominated) keep.push_back(static_cast<int>(i));
  }

  std::vector<AttrSet> sets;
  sets.reserve(keep.size());
  for (int i : keep) sets.push_back(covers[i]);
  std::vector<int> picked = greedy_set_cover(inst.targets, sets);

  AttrSet out(n);
  for (int p : picked) out.set(cg.components[cand[keep[p]]].first());
  assert(is_feasible(out, inst));
  return out;
}

namespace {

std::string node_name(int i, const std::vector<std::string>& names) {
  return i < static_cast<int>(names.size()) ? names[i] : "a" + std::to_string(i);
}

}  // namespace

std::string to_dot(const FDGraph& g, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph fd {\n";
  for (int v = 0; v < g.n; ++v) out << "  \"" << node_name(v, names) << "\";\n";
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v])
      out << "  \"" << node_name(v, names) << "\" -> \"" << node_name(w, names) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const CondensedGraph& cg, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph condensation {\n";
  for (size_t cid = 0; cid < cg.components.size(); ++cid) {
    out << "  c" << cid << " [label=\"{";
    bool first = true;
    cg.components[cid].for_each([&](int i) {
      out << (first ? "" : ",") << node_name(i, names);
      first = false;
    });
    out << "}\"];\n";
  }
  for (size_t cid = 0; cid < cg.dag.size(); ++cid)
    for (int succ : cg.dag[cid]) out << "  c" << cid << " -> c" << succ << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tcand
