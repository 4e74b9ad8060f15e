#include "tcand/lp.hpp"

#include <cassert>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "tcand/errors.hpp"

namespace tcand {

int LPModel::add_var(std::string name, double lo, double hi, double obj) {
  assert(lo == 0.0);  // the simplex keeps lower bounds at zero
  vars.push_back(Var{std::move(name), lo, hi, obj});
  return static_cast<int>(vars.size()) - 1;
}

int LPModel::add_row(std::string name, RowSense sense, double rhs) {
  rows.push_back(Row{std::move(name), sense, rhs, {}});
  return static_cast<int>(rows.size()) - 1;
}

void LPModel::add_term(int row, int var, double coef) {
  assert(row >= 0 && row < static_cast<int>(rows.size()));
  assert(var >= 0 && var < static_cast<int>(vars.size()));
  rows[row].terms.emplace_back(var, coef);
}

namespace {

struct DenseRow {
  std::vector<double> a;
  double b = 0;
  RowSense sense = RowSense::LE;
};

}  // namespace

LPSolution solve_lp(const LPModel& model) {
  const int nv = static_cast<int>(model.vars.size());

  // Model rows plus one row per finite upper bound, signs normalized so b >= 0.
  std::vector<DenseRow> rows;
  rows.reserve(model.rows.size() + nv);
  for (const LPModel::Row& r : model.rows) {
    DenseRow d;
    d.a.assign(nv, 0.0);
    for (auto [v, c] : r.terms) d.a[v] += c;
    d.b = r.rhs;
    d.sense = r.sense;
    rows.push_back(std::move(d));
  }
  for (int v = 0; v < nv; ++v) {
    if (!std::isfinite(model.vars[v].hi)) continue;
    DenseRow d;
    d.a.assign(nv, 0.0);
    d.a[v] = 1.0;
    d.b = model.vars[v].hi;
    d.sense = RowSense::LE;
    rows.push_back(std::move(d));
  }
  for (DenseRow& r : rows) {
    if (r.b >= 0) continue;
    for (double& c : r.a) c = -c;
    r.b = -r.b;
    r.sense = r.sense == RowSense::LE   ? RowSense::GE
              : r.sense == RowSense::GE ? RowSense::LE
                                        : RowSense::EQ;
  }

  const int m = static_cast<int>(rows.size());
  int num_slack = 0, num_art = 0;
  for (const DenseRow& r : rows) {
    if (r.sense != RowSense::EQ) ++num_slack;  // slack or surplus
    if (r.sense != RowSense::LE) ++num_art;
  }
  const int first_slack = nv;
  const int first_art = nv + num_slack;
  const int ncols = nv + num_slack + num_art;

  // tab[i] holds the row coefficients and, at index ncols, the rhs.
  std::vector<std::vector<double>> tab(m, std::vector<double>(ncols + 1, 0.0));
  std::vector<int> basis(m, -1);
  {
    int slack = first_slack, art = first_art;
    for (int i = 0; i < m; ++i) {
      for (int v = 0; v < nv; ++v) tab[i][v] = rows[i].a[v];
      tab[i][ncols] = rows[i].b;
      switch (rows[i].sense) {
        case RowSense::LE:
          tab[i][slack] = 1.0;
          basis[i] = slack++;
          break;
        case RowSense::GE:
          tab[i][slack++] = -1.0;
          tab[i][art] = 1.0;
          basis[i] = art++;
          break;
        case RowSense::EQ:
          tab[i][art] = 1.0;
          basis[i] = art++;
          break;
      }
    }
  }

  std::vector<double> redcost(ncols, 0.0);
  auto build_redcost = [&](const std::vector<double>& cost) {
    for (int j = 0; j < ncols; ++j) {
      double r = cost[j];
      for (int i = 0; i < m; ++i) {
        double cb = cost[basis[i]];
        if (cb != 0.0) r -= cb * tab[i][j];
      }
      redcost[j] = r;
    }
  };
  auto pivot = [&](int row, int col) {
    double p = tab[row][col];
    for (double& x : tab[row]) x /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      double f = tab[i][col];
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[row][j];
    }
    double f = redcost[col];
    if (f != 0.0)
      for (int j = 0; j < ncols; ++j) redcost[j] -= f * tab[row][j];
    basis[row] = col;
  };
  // Bland's rule: entering = lowest-index improving column, leaving = among
  // minimum-ratio rows the one whose basic variable has the lowest index.
  auto optimize = [&](int max_col) -> LPStatus {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < max_col; ++j)
        if (redcost[j] < -kPivotTol) {
          enter = j;
          break;
        }
      if (enter < 0) return LPStatus::Optimal;
      int leave = -1;
      double best = 0;
      for (int i = 0; i < m; ++i) {
        if (tab[i][enter] <= kPivotTol) continue;
        double ratio = tab[i][ncols] / tab[i][enter];
        if (leave < 0 || ratio < best - kPivotTol ||
            (ratio < best + kPivotTol && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      pivot(leave, enter);
    }
  };

  LPSolution sol;
  if (num_art > 0) {
    std::vector<double> cost1(ncols, 0.0);
    for (int j = first_art; j < ncols; ++j) cost1[j] = 1.0;
    build_redcost(cost1);
    LPStatus st = optimize(ncols);
    assert(st == LPStatus::Optimal);  // phase 1 is bounded below by 0
    (void)st;
    double infeas = 0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= first_art) infeas += tab[i][ncols];
    if (infeas > kFeasTol) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive leftover zero-value artificials out of the basis where possible;
    // rows with no eligible pivot are redundant and stay inert.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < first_art) continue;
      for (int j = 0; j < first_art; ++j)
        if (std::fabs(tab[i][j]) > kPivotTol) {
          pivot(i, j);
          break;
        }
    }
  }

  std::vector<double> cost2(ncols, 0.0);
  for (int v = 0; v < nv; ++v) cost2[v] = model.vars[v].obj;
  build_redcost(cost2);
  LPStatus st = optimize(first_art);
  if (st != LPStatus::Optimal) {
    sol.status = st;
    return sol;
  }

  sol.values.assign(nv, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < nv) sol.values[basis[i]] = tab[i][ncols];

  // Post-hoc validation against the original model, then clamping.
  for (int v = 0; v < nv; ++v) {
    double x = sol.values[v];
    if (x < model.vars[v].lo - kFeasTol || x > model.vars[v].hi + kFeasTol)
      throw InternalError("simplex produced an out-of-bounds value for " +
                          model.vars[v].name);
    sol.values[v] = std::min(std::max(x, model.vars[v].lo), model.vars[v].hi);
  }
  for (const LPModel::Row& r : model.rows) {
    double lhs = 0;
    for (auto [v, c] : r.terms) lhs += c * sol.values[v];
    bool ok = r.sense == RowSense::LE   ? lhs <= r.rhs + kFeasTol
              : r.sense == RowSense::GE ? lhs >= r.rhs - kFeasTol
                                        : std::fabs(lhs - r.rhs) <= kFeasTol;
    if (!ok) throw InternalError("simplex violated row " + r.name);
  }
  sol.status = LPStatus::Optimal;
  sol.objective = 0;
  for (int v = 0; v < nv; ++v) sol.objective += model.vars[v].obj * sol.values[v];
  return sol;
}

namespace {

void write_coef(std::ostringstream& out, double c, const std::string& name, bool first) {
  if (c < 0) {
    out << (first ? "- " : " - ");
  } else if (!first) {
    out << " + ";
  }
  double a = std::fabs(c);
  if (a != 1.0) out << std::setprecision(17) << a << " ";
  out << name;
}

}  // namespace

std::string export_lp(const LPModel& model, const std::string& name) {
  std::ostringstream out;
  out << "\\ " << name << "\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (const LPModel::Var& v : model.vars) {
    if (v.obj == 0.0) continue;
    out << " ";
    write_coef(out, v.obj, v.name, first);
    first = false;
  }
  if (first) out << " 0 " << (model.vars.empty() ? "x0" : model.vars[0].name);
  out << "\nSubject To\n";
  for (const LPModel::Row& r : model.rows) {
    out << " " << r.name << ":";
    bool f = true;
    for (auto [v, c] : r.terms) {
      if (c == 0.0) continue;
      out << " ";
      write_coef(out, c, model.vars[v].name, f);
      f = false;
    }
    if (f) out << " 0 " << (model.vars.empty() ? "x0" : model.vars[0].name);
    const char* sense = r.sense == RowSense::LE ? "<=" : r.sense == RowSense::GE ? ">=" : "=";
    out << " " << sense << " " << std::setprecision(17) << r.rhs << "\n";
  }
  out << "Bounds\n";
  for (const LPModel::Var& v : model.vars) {
    out << " " << std::setprecision(17) << v.lo << " <= " << v.name;
    if (std::isfinite(v.hi)) out << " <= " << std::setprecision(17) << v.hi;
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace tcand
