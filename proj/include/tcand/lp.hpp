#pragma once

#include <string>
#include <vector>

namespace tcand {

enum class RowSense { LE, GE, EQ };

// Small dense LP: minimize obj subject to rows and variable bounds.
struct LPModel {
  struct Var {
    std::string name;
    double lo = 0, hi = 1;
    double obj = 0;
  };
  struct Row {
    std::string name;
    RowSense sense = RowSense::LE;
    double rhs = 0;
    std::vector<std::pair<int, double>> terms;  // (var, coefficient)
  };

  std::vector<Var> vars;
  std::vector<Row> rows;

  int add_var(std::string name, double lo, double hi, double obj);
  int add_row(std::string name, RowSense sense, double rhs);
  void add_term(int row, int var, double coef);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  double objective = 0;
  std::vector<double> values;  // clamped into variable bounds
};

inline constexpr double kPivotTol = 1e-10;
inline constexpr double kFeasTol = 1e-9;

// Two-phase dense primal simplex with Bland's rule: deterministic and free of
// cycling. Variable lower bounds must be 0; finite upper bounds become rows.
// The returned point is re-validated against every constraint within kFeasTol.
LPSolution solve_lp(const LPModel& model);

// CPLEX LP text format.
std::string export_lp(const LPModel& model, const std::string& name = "tcand");

}  // namespace tcand
