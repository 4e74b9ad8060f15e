#include "tcand/lp_build.hpp"

#include <cassert>
#include <string>

#include "tcand/errors.hpp"

namespace tcand {

namespace {

// Distinct left sides plus, per attribute, the left sides of FDs into it.
void index_left_sides(const FDSet& fds, std::vector<AttrSet>& ls,
                      std::vector<std::vector<int>>& ls_of) {
  std::map<AttrSet, int> ids;
  ls_of.assign(fds.n, {});
  for (const FD& fd : fds.fds) {
    auto [it, fresh] = ids.emplace(fd.lhs, static_cast<int>(ls.size()));
    if (fresh) ls.push_back(fd.lhs);
    ls_of[fd.rhs].push_back(it->second);
  }
}

}  // namespace

int LayeredLP::x_var(int i, int d) const {
  assert(d >= bottom() && d <= n);
  return x[(d - bottom()) * n + i];
}

int LayeredLP::z_var(int ls_idx, int d) const {
  auto it = z.find({ls_idx, d});
  return it == z.end() ? -1 : it->second;
}

LayeredLP build_layered_lp(const Instance& inst, bool prune) {
  inst.validate();
  LayeredLP out;
  out.n = inst.n();
  out.rounds = inst.rounds;
  out.pruned = prune;
  index_left_sides(inst.fds, out.ls, out.ls_of);

  const int n = out.n, D = out.rounds, bottom = out.bottom();
  const int layers = D + 1;

  // Which attributes can still matter at each layer, scanning top-down.
  std::vector<AttrSet> rel(layers, AttrSet(n));
  if (prune) {
    rel[layers - 1] = inst.targets;
    for (int li = layers - 1; li >= 1; --li) {
      rel[li].for_each([&](int i) {
        rel[li - 1].set(i);
        for (int lsi : out.ls_of[i]) out.ls[lsi].for_each([&](int j) { rel[li - 1].set(j); });
      });
    }
  } else {
    for (int li = 0; li < layers; ++li) rel[li] = AttrSet::full(n);
  }

  out.x.assign(layers * n, -1);
  for (int li = 0; li < layers; ++li) {
    int d = bottom + li;
    rel[li].for_each([&](int i) {
      out.x[li * n + i] = out.model.add_var(
          "x" + std::to_string(i) + "_" + std::to_string(d), 0, 1, li == 0 ? 1.0 : 0.0);
    });
  }
  for (int li = 1; li < layers; ++li) {
    int d = bottom + li;
    rel[li].for_each([&](int i) {
      for (int lsi : out.ls_of[i])
        if (out.z.find({lsi, d}) == out.z.end())
          out.z[{lsi, d}] = out.model.add_var(
              "z" + std::to_string(lsi) + "_" + std::to_string(d), 0, 1, 0.0);
    });
  }

  for (int li = 1; li < layers; ++li) {
    int d = bottom + li;
    rel[li].for_each([&](int i) {
      // x_i^d <= x_i^{d-1} + sum of z over FDs into i
      int row = out.model.add_row("p" + std::to_string(i) + "_" + std::to_string(d),
                                  RowSense::LE, 0);
      out.model.add_term(row, out.x_var(i, d), 1.0);
      out.model.add_term(row, out.x_var(i, d - 1), -1.0);
      for (int lsi : out.ls_of[i]) {
        int zv = out.z_var(lsi, d);
        assert(zv >= 0);
        out.model.add_term(row, zv, -1.0);
      }
    });
  }
  for (const auto& [key, zv] : out.z) {
    auto [lsi, d] = key;
    out.ls[lsi].for_each([&](int j) {
      // z_LS^d <= x_j^{d-1} for every member of the left side
      int xv = out.x_var(j, d - 1);
      assert(xv >= 0);
      int row = out.model.add_row("zb" + std::to_string(lsi) + "_" + std::to_string(d) + "_" +
                                      std::to_string(j),
                                  RowSense::LE, 0);
      out.model.add_term(row, zv, 1.0);
      out.model.add_term(row, xv, -1.0);
    });
  }
  inst.targets.for_each([&](int t) {
    int row = out.model.add_row("t" + std::to_string(t), RowSense::EQ, 1.0);
    out.model.add_term(row, out.x_var(t, n), 1.0);
  });
  return out;
}

OneRoundLP build_one_round_lp(const Instance& inst) {
  inst.validate();
  if (inst.n() > 0 && inst.rounds != 1)
    throw PreconditionError("one-round LP needs rounds = 1, got " +
                            std::to_string(inst.rounds));
  OneRoundLP out;
  out.n = inst.n();

  std::map<AttrSet, int> ids;
  out.ls_of_target.assign(out.n, {});
  for (const FD& fd : inst.fds.fds) {
    if (!inst.targets.test(fd.rhs)) continue;
    auto [it, fresh] = ids.emplace(fd.lhs, static_cast<int>(out.ls.size()));
    if (fresh) out.ls.push_back(fd.lhs);
    out.ls_of_target[fd.rhs].push_back(it->second);
  }

  out.y.assign(out.n, -1);
  for (int i = 0; i < out.n; ++i)
    out.y[i] = out.model.add_var("y" + std::to_string(i), 0, 1, 1.0);
  out.z.assign(out.ls.size(), -1);
  for (size_t lsi = 0; lsi < out.ls.size(); ++lsi)
    out.z[lsi] = out.model.add_var("z" + std::to_string(lsi), 0, 1, 0.0);

  inst.targets.for_each([&](int t) {
    // y_t + incoming z-mass covers t; y_t stands in for the virtual FD t -> t
    int row = out.model.add_row("c" + std::to_string(t), RowSense::GE, 1.0);
    out.model.add_term(row, out.y[t], 1.0);
    for (int lsi : out.ls_of_target[t]) out.model.add_term(row, out.z[lsi], 1.0);
  });
  for (size_t lsi = 0; lsi < out.ls.size(); ++lsi) {
    out.ls[lsi].for_each([&](int j) {
      int row = out.model.add_row("zb" + std::to_string(lsi) + "_" + std::to_string(j),
                                  RowSense::LE, 0);
      out.model.add_term(row, out.z[lsi], 1.0);
      out.model.add_term(row, out.y[j], -1.0);
    });
  }
  return out;
}

double lp_lower_bound(const Instance& inst) {
  LayeredLP lp = build_layered_lp(inst);
  LPSolution sol = solve_lp(lp.model);
  if (sol.status != LPStatus::Optimal)
    throw InternalError("layered LP should always be solvable");
  return sol.objective;
}

}  // namespace tcand
