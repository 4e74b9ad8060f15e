#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"
#include "tcand/gen.hpp"
#include "tcand/lp.hpp"
#include "tcand/lp_build.hpp"
#include "tcand/oracle.hpp"
#include "tcand/rng.hpp"

using namespace tcand;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Instance random_depth_instance(Rng& rng, int max_n, int depth_cap) {
  int n = 2 + static_cast<int>(rng.next_below(max_n - 1));
  NamedInstance ni = gen_random_instance(n, 1 + static_cast<int>(rng.next_below(12)),
                                         std::min(3, n - 1), 0.4, rng.next_u64());
  Instance inst = ni.instance;
  inst.rounds = 1 + static_cast<int>(rng.next_below(std::min(n, depth_cap)));
  return inst;
}

double row_activity(const LPModel& model, const LPModel::Row& row,
                    const std::vector<double>& vals) {
  double acc = 0;
  (void)model;
  for (auto [v, c] : row.terms) acc += c * vals[v];
  return acc;
}

void check_point_feasible(const LPModel& model, const std::vector<double>& vals,
                          double tol = 1e-9) {
  for (size_t v = 0; v < model.vars.size(); ++v) {
    CHECK(vals[v] >= model.vars[v].lo - tol);
    if (std::isfinite(model.vars[v].hi)) CHECK(vals[v] <= model.vars[v].hi + tol);
  }
  for (const auto& row : model.rows) {
    double act = row_activity(model, row, vals);
    if (row.sense != RowSense::GE) CHECK(act <= row.rhs + tol);
    if (row.sense != RowSense::LE) CHECK(act >= row.rhs - tol);
  }
}

// The hand-checkable optimum of the gap construction's relaxation: activate
// attribute (i, r) from layer n-D+r upward at value 2^{r-D}.
std::vector<double> gap_witness(const LayeredLP& lp, int g) {
  std::vector<double> vals(lp.model.vars.size(), 0.0);
  auto xval = [&](int attr, int d) {
    int r = attr / g;
    return d >= lp.bottom() + r ? std::ldexp(1.0, r - lp.rounds) : 0.0;
  };
  for (int d = lp.bottom(); d <= lp.n; ++d)
    for (int i = 0; i < lp.n; ++i) {
      int var = lp.x_var(i, d);
      if (var >= 0) vals[var] = xval(i, d);
    }
  for (const auto& [key, var] : lp.z) {
    auto [lsi, d] = key;
    double z = kInf;
    lp.ls[lsi].for_each([&](int j) { z = std::min(z, xval(j, d - 1)); });
    vals[var] = z;
  }
  return vals;
}

}  // namespace

TEST_CASE("simplex solves a unit covering LP") {
  LPModel m;
  int x = m.add_var("x", 0, 1, 1.0);
  int y = m.add_var("y", 0, 1, 1.0);
  int r = m.add_row("cover", RowSense::GE, 1.0);
  m.add_term(r, x, 1.0);
  m.add_term(r, y, 1.0);
  LPSolution sol = solve_lp(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(1.0));
  check_point_feasible(m, sol.values);
}

TEST_CASE("simplex maximizes into the corner of a box") {
  LPModel m;  // min -x - 2y, x + y <= 3, y <= 2, x <= 2
  int x = m.add_var("x", 0, 2, -1.0);
  int y = m.add_var("y", 0, 2, -2.0);
  int r = m.add_row("cap", RowSense::LE, 3.0);
  m.add_term(r, x, 1.0);
  m.add_term(r, y, 1.0);
  LPSolution sol = solve_lp(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-5.0));
  CHECK(sol.values[x] == doctest::Approx(1.0));
  CHECK(sol.values[y] == doctest::Approx(2.0));
}

TEST_CASE("simplex handles equalities and duplicated rows") {
  LPModel m;  // min x s.t. x + y = 1 (twice), x - y = 0 -> x = y = 0.5
  int x = m.add_var("x", 0, 3, 1.0);
  int y = m.add_var("y", 0, 3, 0.0);
  for (int k = 0; k < 2; ++k) {
    int r = m.add_row("sum", RowSense::EQ, 1.0);
    m.add_term(r, x, 1.0);
    m.add_term(r, y, 1.0);
  }
  int r = m.add_row("diag", RowSense::EQ, 0.0);
  m.add_term(r, x, 1.0);
  m.add_term(r, y, -1.0);
  LPSolution sol = solve_lp(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(0.5));
  CHECK(sol.values[y] == doctest::Approx(0.5));
}

TEST_CASE("simplex reports infeasibility and unboundedness") {
  LPModel bad;
  int x = bad.add_var("x", 0, 1, 1.0);
  int r = bad.add_row("big", RowSense::GE, 2.0);
  bad.add_term(r, x, 1.0);
  CHECK(solve_lp(bad).status == LPStatus::Infeasible);

  LPModel open;
  open.add_var("x", 0, kInf, -1.0);
  CHECK(solve_lp(open).status == LPStatus::Unbounded);
}

TEST_CASE("simplex finishes Beale's cycling example") {
  LPModel m;
  int x1 = m.add_var("x1", 0, kInf, -0.75);
  int x2 = m.add_var("x2", 0, kInf, 150.0);
  int x3 = m.add_var("x3", 0, 1, -0.02);
  int x4 = m.add_var("x4", 0, kInf, 6.0);
  int r1 = m.add_row("r1", RowSense::LE, 0.0);
  m.add_term(r1, x1, 0.25);
  m.add_term(r1, x2, -60.0);
  m.add_term(r1, x3, -0.04);
  m.add_term(r1, x4, 9.0);
  int r2 = m.add_row("r2", RowSense::LE, 0.0);
  m.add_term(r2, x1, 0.5);
  m.add_term(r2, x2, -90.0);
  m.add_term(r2, x3, -0.02);
  m.add_term(r2, x4, 3.0);
  LPSolution sol = solve_lp(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-0.05));
  check_point_feasible(m, sol.values);
}

TEST_CASE("simplex respects tight upper bounds") {
  LPModel m;
  int x = m.add_var("x", 0, 0.5, -1.0);
  LPSolution sol = solve_lp(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-0.5));
  CHECK(sol.values[x] == doctest::Approx(0.5));
}

TEST_CASE("empty model is trivially optimal") {
  LPSolution sol = solve_lp(LPModel{});
  CHECK(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(0.0));
}

TEST_CASE("layered builder shapes the chain relaxation") {
  Instance inst;  // a -> b, target b, two rounds
  inst.fds.n = 2;
  inst.fds.fds.push_back(FD{AttrSet::of(2, {0}), 1});
  inst.targets = AttrSet::of(2, {1});
  inst.rounds = 2;

  LayeredLP full = build_layered_lp(inst, false);
  CHECK(full.bottom() == 0);
  for (int d = 0; d <= 2; ++d)
    for (int i = 0; i < 2; ++i) CHECK(full.x_var(i, d) >= 0);
  CHECK(full.z_var(0, 1) >= 0);
  CHECK(full.z_var(0, 2) >= 0);
  // objective weight sits only on the bottom layer
  for (int i = 0; i < 2; ++i) {
    CHECK(full.model.vars[full.x_var(i, 0)].obj == doctest::Approx(1.0));
    CHECK(full.model.vars[full.x_var(i, 2)].obj == doctest::Approx(0.0));
  }

  LayeredLP pruned = build_layered_lp(inst);
  CHECK(pruned.x_var(0, 2) == -1);  // a cannot matter at the top layer
  CHECK(pruned.x_var(1, 2) >= 0);
  double a = solve_lp(full.model).objective;
  double b = solve_lp(pruned.model).objective;
  CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("one-round relaxation of a double fan costs one") {
  Instance inst;  // a -> t, b -> t, target t
  inst.fds.n = 3;
  inst.fds.fds.push_back(FD{AttrSet::of(3, {0}), 2});
  inst.fds.fds.push_back(FD{AttrSet::of(3, {1}), 2});
  inst.targets = AttrSet::of(3, {2});
  inst.rounds = 1;
  OneRoundLP lp = build_one_round_lp(inst);
  CHECK(lp.ls.size() == 2);
  CHECK(lp.ls_of_target[2].size() == 2);
  LPSolution sol = solve_lp(lp.model);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(1.0));
  CHECK(lp_lower_bound(inst) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("a dependency with empty left side makes targets free") {
  Instance inst;
  inst.fds.n = 1;
  inst.fds.fds.push_back(FD{AttrSet(1), 0});
  inst.targets = AttrSet::of(1, {0});
  inst.rounds = 1;
  CHECK(lp_lower_bound(inst) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(exact_tcand(inst).empty());
}

TEST_CASE("empty instance has a zero bound") {
  Instance inst;
  CHECK(lp_lower_bound(inst) == doctest::Approx(0.0));
}

TEST_CASE("one-round and depth-one layered relaxations agree") {
  Rng rng(7459);
  for (int iter = 0; iter < 120; ++iter) {
    Instance inst = random_depth_instance(rng, 8, 3);
    inst.rounds = 1;
    OneRoundLP lp = build_one_round_lp(inst);
    LPSolution sol = solve_lp(lp.model);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(lp_lower_bound(inst) == doctest::Approx(sol.objective).epsilon(1e-6));
  }
}

TEST_CASE("pruning never changes the optimum") {
  Rng rng(9013);
  for (int iter = 0; iter < 100; ++iter) {
    Instance inst = random_depth_instance(rng, 7, 3);
    LPSolution full = solve_lp(build_layered_lp(inst, false).model);
    LPSolution pruned = solve_lp(build_layered_lp(inst, true).model);
    REQUIRE(full.status == LPStatus::Optimal);
    REQUIRE(pruned.status == LPStatus::Optimal);
    CHECK(full.objective == doctest::Approx(pruned.objective).epsilon(1e-6));
  }
}

TEST_CASE("the relaxation lower-bounds the exact optimum and relaxes with depth") {
  Rng rng(31337);
  for (int iter = 0; iter < 80; ++iter) {
    Instance inst = random_depth_instance(rng, 7, 3);
    double lp = lp_lower_bound(inst);
    CHECK(lp <= exact_tcand(inst).count() + 1e-6);
    if (inst.rounds < inst.n()) {
      Instance deeper = inst;
      deeper.rounds = inst.rounds + 1;
      CHECK(lp_lower_bound(deeper) <= lp + 1e-6);
    }
  }
}

TEST_CASE("gap construction halves the relaxation each extra round") {
  for (int depth = 1; depth <= 3; ++depth) {
    NamedInstance ni = gen_gap_instance(5, depth);
    const Instance& inst = ni.instance;
    CHECK(exact_tcand(inst).count() == 5);

    LayeredLP lp = build_layered_lp(inst);
    LPSolution sol = solve_lp(lp.model);
    REQUIRE(sol.status == LPStatus::Optimal);
    double claimed = 5.0 * std::ldexp(1.0, -depth);
    CHECK(sol.objective <= claimed + 1e-6);

    // the explicit point certifies the bound independently of the solver
    std::vector<double> witness = gap_witness(lp, 5);
    check_point_feasible(lp.model, witness);
    double wobj = 0;
    for (size_t v = 0; v < lp.model.vars.size(); ++v)
      wobj += lp.model.vars[v].obj * witness[v];
    CHECK(wobj == doctest::Approx(claimed).epsilon(1e-12));
    CHECK(sol.objective <= wobj + 1e-9);
  }
}

TEST_CASE("lp text export lists the pieces") {
  LPModel m;
  int x = m.add_var("x", 0, 1, 1.0);
  int r = m.add_row("need", RowSense::GE, 1.0);
  m.add_term(r, x, 1.0);
  std::string text = export_lp(m, "demo");
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("Bounds") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  CHECK(text.find("need:") != std::string::npos);
  CHECK(text.find("x") != std::string::npos);
}
