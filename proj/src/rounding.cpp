#include "tcand/rounding.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <string>

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"
#include "tcand/lp_build.hpp"
#include "tcand/rng.hpp"

namespace tcand {

int MetaGraph::max_degree() const {
  size_t d = 0;
  for (const auto& nb : adj) d = std::max(d, nb.size());
  return static_cast<int>(d);
}

MetaGraph build_meta_graph(int target, const FDSet& fds) {
  MetaGraph mg;
  mg.target = target;
  std::map<AttrSet, int> seen;
  for (const FD& fd : fds.fds) {
    if (fd.rhs != target) continue;
    if (seen.emplace(fd.lhs, 0).second) mg.nodes.push_back(fd.lhs);
  }
  AttrSet self(fds.n);
  self.set(target);
  mg.nodes.push_back(self);
  mg.virtual_node = static_cast<int>(mg.nodes.size()) - 1;

  mg.adj.assign(mg.nodes.size(), {});
  for (size_t i = 0; i < mg.nodes.size(); ++i)
    for (size_t j = i + 1; j < mg.nodes.size(); ++j)
      if (mg.nodes[i].intersects(mg.nodes[j])) {
        mg.adj[i].push_back(static_cast<int>(j));
        mg.adj[j].push_back(static_cast<int>(i));
      }
  return mg;
}

namespace {

struct Rebalancer {
  const std::vector<std::vector<int>>& adj;
  int classes;
  std::vector<int> color;
  std::vector<int> sizes;

  bool movable(int v, int to) const {
    for (int w : adj[v])
      if (color[w] == to) return false;
    return true;
  }

  // Shift one vertex along a path of classes found by BFS from every largest
  // class to some class at least two smaller. Executing edges back-to-front
  // keeps every recorded move legal: a class only ever loses vertices before
  // its incoming move runs.
  bool rebalance() {
    for (;;) {
      int lo = *std::min_element(sizes.begin(), sizes.end());
      int hi = *std::max_element(sizes.begin(), sizes.end());
      if (hi - lo <= 1) return true;
      if (!rebalance_step(hi)) return false;
    }
  }

  bool rebalance_step(int hi) {

    std::vector<int> prev_class(classes, -1), prev_witness(classes, -1);
    std::vector<int> queue;
    for (int c = 0; c < classes; ++c)
      if (sizes[c] == hi) {
        prev_class[c] = c;
        queue.push_back(c);
      }
    int found = -1;
    for (size_t head = 0; head < queue.size() && found < 0; ++head) {
      int from = queue[head];
      for (int to = 0; to < classes && found < 0; ++to) {
        if (prev_class[to] != -1) continue;
        int witness = -1;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
          if (color[v] == from && movable(v, to)) {
            witness = v;
            break;
          }
        if (witness < 0) continue;
        prev_class[to] = from;
        prev_witness[to] = witness;
        if (sizes[to] <= hi - 2) found = to;
        else queue.push_back(to);
      }
    }
    if (found < 0) return false;

    std::vector<std::pair<int, int>> moves;  // (vertex, destination class)
    for (int c = found; prev_class[c] != c; c = prev_class[c])
      moves.emplace_back(prev_witness[c], c);
    for (auto [v, to] : moves) {
      assert(movable(v, to));
      --sizes[color[v]];
      color[v] = to;
      ++sizes[to];
    }
    return true;
  }
};

bool try_equitable(const std::vector<std::vector<int>>& adj, int k, int shift,
                   std::vector<int>& color_out) {
  const int n = static_cast<int>(adj.size());
  const int classes = k + 1;
  Rebalancer rb{adj, classes, std::vector<int>(n, -1), std::vector<int>(classes, 0)};
  for (int step = 0; step < n; ++step) {
    int v = (step + shift) % n;
    std::vector<bool> used(classes, false);
    for (int w : adj[v])
      if (rb.color[w] >= 0) used[rb.color[w]] = true;
    for (int c = 0; c < classes; ++c)
      if (!used[c]) {
        rb.color[v] = c;
        ++rb.sizes[c];
        break;
      }
  }
  if (!rb.rebalance()) return false;
  color_out = std::move(rb.color);
  return true;
}

// Exhaustive fallback for tiny graphs: lexicographically first proper
// assignment kept inside the balanced class sizes. Capping every class at the
// ceiling and requiring that the leftover vertices can still fill every class
// to the floor makes any completed assignment balanced.
bool exact_equitable(const std::vector<std::vector<int>>& adj, int k,
                     std::vector<int>& color_out) {
  const int n = static_cast<int>(adj.size());
  const int classes = k + 1;
  const int floor_size = n / classes;
  const int ceil_size = (n + classes - 1) / classes;
  std::vector<int> color(n, -1), sizes(classes, 0);
  int deficit = floor_size * classes;  // total vertices still owed to reach floors
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < classes; ++c) {
      if (sizes[c] == ceil_size) continue;
      bool ok = true;
      for (int w : adj[v])
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      int owed = deficit - (sizes[c] < floor_size ? 1 : 0);
      if (owed > n - v - 1) continue;  // cannot fill every class to its floor
      color[v] = c;
      ++sizes[c];
      deficit = owed;
      if (self(self, v + 1)) return true;
      deficit += sizes[c] <= floor_size ? 1 : 0;
      color[v] = -1;
      --sizes[c];
    }
    return false;
  };
  if (!dfs(dfs, 0)) return false;
  color_out = std::move(color);
  return true;
}

}  // namespace

Coloring equitable_coloring(const std::vector<std::vector<int>>& adj, int k) {
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(adj[v].size()) > k)
      throw PreconditionError("vertex degree " + std::to_string(adj[v].size()) +
                              " exceeds coloring bound " + std::to_string(k));

  std::vector<int> color;
  bool ok = false;
  for (int shift = 0; shift < std::max(n, 1) && !ok; ++shift)
    ok = try_equitable(adj, k, shift, color);
  if (!ok && n <= 20) ok = exact_equitable(adj, k, color);
  if (!ok) throw InternalError("equitable coloring did not converge");

  Coloring out;
  out.color = std::move(color);
  out.num_classes = k + 1;
  out.class_sizes.assign(k + 1, 0);
  for (int c : out.color) ++out.class_sizes[c];

  // Postconditions: proper and balanced.
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (out.color[v] == out.color[w])
        throw InternalError("equitable coloring produced adjacent same-color nodes");
  int lo = *std::min_element(out.class_sizes.begin(), out.class_sizes.end());
  int hi = *std::max_element(out.class_sizes.begin(), out.class_sizes.end());
  if (hi - lo > 1) throw InternalError("equitable coloring produced unbalanced classes");
  return out;
}

AttrSet round_deterministic(const Instance& inst) {
  inst.validate();
  const int n = inst.n();
  if (n == 0) return AttrSet(0);

  LayeredLP lp = build_layered_lp(inst);
  LPSolution sol = solve_lp(lp.model);
  if (sol.status != LPStatus::Optimal)
    throw InternalError("layered LP should always be solvable");

  double threshold = std::pow(stats(inst.fds).f + 1.0, -inst.rounds) - 1e-9;
  AttrSet out(n);
  for (int i = 0; i < n; ++i) {
    int xv = lp.x_var(i, lp.bottom());
    if (xv >= 0 && sol.values[xv] >= threshold) out.set(i);
  }
  if (!is_feasible(out, inst))
    throw InternalError("threshold rounding produced an infeasible set");
  return out;
}

namespace {

// Degree bound that covers every per-target meta-graph: the pairwise bound of
// the stored left sides can be exceeded only by virtual singleton nodes.
int rounding_delta(const Instance& inst, bool all_attrs) {
  int delta = stats(inst.fds).delta;
  if (all_attrs) {
    for (int i = 0; i < inst.n(); ++i)
      delta = std::max(delta, build_meta_graph(i, inst.fds).max_degree());
  } else {
    inst.targets.for_each([&](int t) {
      delta = std::max(delta, build_meta_graph(t, inst.fds).max_degree());
    });
  }
  return delta;
}

int coin_count(double oversample, int delta, int n) {
  double c = std::ceil(oversample * (delta + 1) * std::log(std::max(n, 1)));
  return std::max(1, static_cast<int>(c));
}

}  // namespace

RandomizedPlan make_randomized_plan(const Instance& inst, double oversample) {
  inst.validate();
  if (oversample <= 0) throw PreconditionError("oversample factor must be positive");
  if (inst.n() > 0 && inst.rounds != 1)
    throw PreconditionError("randomized rounding plan needs rounds = 1");

  RandomizedPlan plan;
  plan.n = inst.n();
  if (plan.n == 0) return plan;

  OneRoundLP lp = build_one_round_lp(inst);
  LPSolution sol = solve_lp(lp.model);
  if (sol.status != LPStatus::Optimal)
    throw InternalError("one-round LP should always be solvable");
  plan.lp_objective = sol.objective;
  plan.delta = rounding_delta(inst, false);
  plan.coins = coin_count(oversample, plan.delta, plan.n);

  inst.targets.for_each([&](int t) {
    MetaGraph mg = build_meta_graph(t, inst.fds);
    std::vector<double> weight(mg.nodes.size());
    for (size_t k = 0; k + 1 < mg.nodes.size(); ++k) {
      int lsi = lp.ls_of_target[t][k];
      assert(mg.nodes[k] == lp.ls[lsi]);
      weight[k] = sol.values[lp.z[lsi]];
    }
    weight[mg.virtual_node] = sol.values[lp.y[t]];

    Coloring col = equitable_coloring(mg.adj, plan.delta);
    std::vector<double> mass(col.num_classes, 0);
    for (size_t k = 0; k < mg.nodes.size(); ++k) mass[col.color[k]] += weight[k];
    int chosen = -1;
    for (int c = 0; c < col.num_classes; ++c)
      if (mass[c] >= 1.0 / (plan.delta + 1) - 1e-9) {
        chosen = c;
        break;
      }
    // The covering row sums the weights to at least 1, so some class of the
    // delta+1 reaches the average.
    if (chosen < 0) throw InternalError("no color class carries enough z-mass");

    RandomizedPlan::TargetPlan tp;
    tp.target = t;
    AttrSet cand(plan.n);
    for (size_t k = 0; k < mg.nodes.size(); ++k)
      if (col.color[k] == chosen) cand |= mg.nodes[k];
    cand.for_each([&](int i) {
      tp.candidates.push_back(i);
      tp.probs.push_back(sol.values[lp.y[i]]);
    });
    plan.targets.push_back(std::move(tp));
  });
  return plan;
}

AttrSet sample_randomized(const RandomizedPlan& plan, uint64_t seed) {
  AttrSet out(plan.n);
  Rng root(seed);
  for (const auto& tp : plan.targets) {
    Rng per_target = root.derive(tp.target);
    for (size_t k = 0; k < tp.candidates.size(); ++k) {
      Rng coins = per_target.derive(tp.candidates[k]);
      for (int c = 0; c < plan.coins; ++c)
        if (coins.next_bernoulli(tp.probs[k])) {
          out.set(tp.candidates[k]);
          break;
        }
    }
  }
  return out;
}

AttrSet round_randomized(const Instance& inst, uint64_t seed, double oversample) {
  return sample_randomized(make_randomized_plan(inst, oversample), seed);
}

AttrSet round_randomized_d(const Instance& inst, uint64_t seed, double oversample) {
  inst.validate();
  if (inst.rounds <= 1) return round_randomized(inst, seed, oversample);
  if (oversample <= 0) throw PreconditionError("oversample factor must be positive");

  const int n = inst.n();
  LayeredLP lp = build_layered_lp(inst);
  LPSolution sol = solve_lp(lp.model);
  if (sol.status != LPStatus::Optimal)
    throw InternalError("layered LP should always be solvable");

  int delta = rounding_delta(inst, true);
  int coins = coin_count(oversample, delta, n);
  std::map<AttrSet, int> ls_id;
  for (size_t lsi = 0; lsi < lp.ls.size(); ++lsi) ls_id[lp.ls[lsi]] = static_cast<int>(lsi);

  Rng root(seed);
  AttrSet goals = inst.targets;
  for (int d = n; d > lp.bottom(); --d) {
    AttrSet next(n);
    Rng per_layer = root.derive(d);
    goals.for_each([&](int i) {
      MetaGraph mg = build_meta_graph(i, inst.fds);
      std::vector<double> weight(mg.nodes.size());
      double total = 0;
      for (size_t k = 0; k + 1 < mg.nodes.size(); ++k) {
        int zv = lp.z_var(ls_id.at(mg.nodes[k]), d);
        assert(zv >= 0);
        weight[k] = sol.values[zv];
        total += weight[k];
      }
      int self = lp.x_var(i, d - 1);
      assert(self >= 0);
      weight[mg.virtual_node] = sol.values[self];
      total += weight[mg.virtual_node];

      Coloring col = equitable_coloring(mg.adj, delta);
      std::vector<double> mass(col.num_classes, 0);
      for (size_t k = 0; k < mg.nodes.size(); ++k) mass[col.color[k]] += weight[k];
      int chosen = 0;
      for (int c = 0; c < col.num_classes; ++c)
        if (mass[c] >= total / col.num_classes - 1e-9) {
          chosen = c;
          break;
        }

      AttrSet cand(n);
      for (size_t k = 0; k < mg.nodes.size(); ++k)
        if (col.color[k] == chosen) cand |= mg.nodes[k];
      Rng per_goal = per_layer.derive(i);
      cand.for_each([&](int j) {
        int xv = lp.x_var(j, d - 1);
        double p = xv >= 0 ? sol.values[xv] : 0.0;
        Rng coin_rng = per_goal.derive(j);
        for (int c = 0; c < coins; ++c)
          if (coin_rng.next_bernoulli(p)) {
            next.set(j);
            break;
          }
      });
    });
    goals = next;
    if (goals.empty()) break;
  }
  return goals;
}

}  // namespace tcand
