// Command-line front end for the TCAND solver library.
//
// Subcommands:
//   closure  print the (bounded) closure of an attribute set
//   solve    run one solver mode, or --compare all applicable ones
//   gen      emit a generated instance in the FD file format
//   bench    run a small benchmark suite
//
// Output is JSON on stdout (schema_version 1); solve/bench render a human
// table with --pretty / without --json. Exit codes: 0 success, 2 parse error,
// 3 precondition violation, 4 infeasible instance, 5 internal solver error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"
#include "tcand/fd_graph.hpp"
#include "tcand/gen.hpp"
#include "tcand/lp_build.hpp"
#include "tcand/oracle.hpp"
#include "tcand/parse.hpp"
#include "tcand/redblue.hpp"
#include "tcand/rounding.hpp"

namespace {

using nlohmann::json;
using namespace tcand;

constexpr int kSchemaVersion = 1;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  auto dt = std::chrono::steady_clock::now() - start;
  double ms = std::chrono::duration<double, std::milli>(dt).count();
  return std::round(ms * 1000.0) / 1000.0;  // keep JSON readable
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One input file: either an FD instance or an RBSC instance.
struct LoadedFile {
  std::string path;
  bool is_rbsc = false;
  NamedInstance fd;
  NamedRbsc rbsc;
};

LoadedFile load_file(const std::string& path) {
  LoadedFile out;
  out.path = path;
  std::string text = read_file(path);
  out.is_rbsc = looks_like_rbsc(text);
  if (out.is_rbsc) {
    out.rbsc = parse_rbsc_text(text);
    out.rbsc.rbsc.validate();
  } else {
    out.fd = parse_instance_text(text);
    out.fd.instance.validate();
  }
  return out;
}

json names_json(const std::vector<std::string>& names, const AttrSet& s) {
  json arr = json::array();
  s.for_each([&](int i) { arr.push_back(names[i]); });
  return arr;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

AttrSet parse_attr_list(const NamedInstance& ni, const std::string& text) {
  AttrSet s(ni.instance.n());
  for (const std::string& name : split_list(text)) {
    int id = ni.id_of(name);
    if (id < 0) throw PreconditionError("unknown attribute: " + name);
    s.set(id);
  }
  return s;
}

// ---------------------------------------------------------------------------
// closure

struct ClosureArgs {
  std::string file;
  std::string attrs;
  int rounds = -1;  // -1: full closure
};

int cmd_closure(const ClosureArgs& a) {
  LoadedFile in = load_file(a.file);
  if (in.is_rbsc) throw PreconditionError("closure needs an FD instance, not an RBSC file");
  const NamedInstance& ni = in.fd;
  const Instance& inst = ni.instance;

  AttrSet x = parse_attr_list(ni, a.attrs);
  int rounds = a.rounds < 0 ? inst.n() : a.rounds;
  if (a.rounds < -1) throw PreconditionError("rounds must be non-negative");
  AttrSet cl = bounded_closure(x, inst.fds, rounds);

  json out = {
      {"schema_version", kSchemaVersion},
      {"command", "closure"},
      {"file", a.file},
      {"input", names_json(ni.names, x)},
      {"rounds", rounds},
      {"closure", names_json(ni.names, cl)},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string file;
  std::string mode = "lp-det";
  uint64_t seed = 1;
  double oversample = 2.0;
  bool compare = false;
  bool pretty = false;
};

struct ModeResult {
  std::string mode;
  AttrSet solution;
  bool feasible = false;
  double ms = 0;
  std::optional<uint64_t> seed_used;  // lp-rand only
};

// Runs one solver mode on an FD instance; the solution is re-verified with
// is_feasible before the feasible flag is set.
ModeResult run_fd_mode(const Instance& inst, const std::string& mode, uint64_t seed,
                       double oversample) {
  ModeResult r;
  r.mode = mode;
  auto start = std::chrono::steady_clock::now();
  if (mode == "exact") {
    r.solution = exact_tcand(inst);
  } else if (mode == "simple") {
    r.solution = solve_simple(inst);
  } else if (mode == "lp-det") {
    r.solution = round_deterministic(inst);
  } else if (mode == "lp-rand") {
    bool found = false;
    for (uint64_t k = 0; k < 10 && !found; ++k) {
      AttrSet cand = round_randomized(inst, seed + k, oversample);
      if (is_feasible(cand, inst)) {
        r.solution = cand;
        r.seed_used = seed + k;
        found = true;
      }
    }
    if (!found)
      throw InternalError("randomized rounding stayed infeasible for 10 consecutive seeds");
  } else if (mode == "rbsc-greedy") {
    TcandToRbsc red = tcand_to_rbsc(inst);
    RbscSolution greedy = rbsc_greedy(red.rbsc);
    AttrSet picked(inst.n());
    for (int s : greedy.chosen)
      (red.rbsc.sets[s] & red.rbsc.reds).for_each([&](int i) {
        if (i < inst.n()) picked.set(i);
      });
    r.solution = picked;
  } else {
    throw PreconditionError("unknown solver mode: " + mode);
  }
  r.ms = elapsed_ms(start);
  r.feasible = is_feasible(r.solution, inst);
  return r;
}

json fd_mode_json(const NamedInstance& ni, const ModeResult& r) {
  json out = {
      {"mode", r.mode},
      {"solution", names_json(ni.names, r.solution)},
      {"size", r.solution.count()},
      {"feasible", r.feasible},
      {"elapsed_ms", r.ms},
  };
  if (r.seed_used) out["seed"] = *r.seed_used;
  return out;
}

// Modes that make sense for this instance, in comparison order.
std::vector<std::string> applicable_modes(const Instance& inst) {
  std::vector<std::string> modes;
  if (inst.n() <= 24) modes.push_back("exact");
  if (is_simple(inst.fds) && inst.rounds == inst.n()) modes.push_back("simple");
  modes.push_back("lp-det");
  if (inst.rounds == 1) {
    modes.push_back("lp-rand");
    modes.push_back("rbsc-greedy");
  }
  return modes;
}

void print_fd_pretty(const NamedInstance& ni, const json& out) {
  std::cout << "file:      " << out["file"].get<std::string>() << "\n"
            << "attrs:     " << ni.instance.n() << "\n"
            << "fds:       " << ni.instance.fds.size() << "\n"
            << "rounds:    " << ni.instance.rounds << "\n";
  if (out.contains("lp_bound"))
    std::cout << "lp bound:  " << out["lp_bound"].get<double>() << "\n";
  if (out.contains("modes")) {
    std::cout << std::left << std::setw(12) << "mode" << std::right << std::setw(6) << "size"
              << std::setw(10) << "feasible" << std::setw(12) << "ratio" << std::setw(12)
              << "ms" << "\n";
    for (const json& m : out["modes"]) {
      std::cout << std::left << std::setw(12) << m["mode"].get<std::string>() << std::right
                << std::setw(6) << m["size"].get<int>() << std::setw(10)
                << (m["feasible"].get<bool>() ? "yes" : "NO");
      if (m.contains("ratio_vs_exact"))
        std::cout << std::setw(12) << std::fixed << std::setprecision(3)
                  << m["ratio_vs_exact"].get<double>() << std::defaultfloat;
      else
        std::cout << std::setw(12) << "-";
      std::cout << std::setw(12) << m["elapsed_ms"].get<double>() << "\n";
    }
  } else {
    std::string sol;
    for (const json& name : out["solution"]) {
      if (!sol.empty()) sol += " ";
      sol += name.get<std::string>();
    }
    std::cout << "mode:      " << out["mode"].get<std::string>() << "\n"
              << "solution:  " << (sol.empty() ? "(empty)" : sol) << "\n"
              << "size:      " << out["size"].get<int>() << "\n"
              << "feasible:  " << (out["feasible"].get<bool>() ? "yes" : "NO") << "\n";
    if (out.contains("ratio_vs_lp"))
      std::cout << "ratio/lp:  " << out["ratio_vs_lp"].get<double>() << "\n";
    std::cout << "time:      " << out["elapsed_ms"].get<double>() << " ms\n";
  }
}

int solve_fd(const SolveArgs& a, const NamedInstance& ni) {
  const Instance& inst = ni.instance;
  if (!is_feasible(AttrSet::full(inst.n()), inst))
    throw InfeasibleError("targets are not derivable even from the full attribute set");

  double lp_bound = lp_lower_bound(inst);
  json out = {
      {"schema_version", kSchemaVersion},
      {"command", "solve"},
      {"file", a.file},
      {"format", "fd"},
      {"n", inst.n()},
      {"fd_count", inst.fds.size()},
      {"rounds", inst.rounds},
      {"lp_bound", lp_bound},
  };

  if (a.compare) {
    std::optional<int> exact_size;
    json modes = json::array();
    for (const std::string& mode : applicable_modes(inst)) {
      ModeResult r = run_fd_mode(inst, mode, a.seed, a.oversample);
      if (mode == "exact") exact_size = r.solution.count();
      modes.push_back(fd_mode_json(ni, r));
    }
    if (exact_size && *exact_size > 0)
      for (json& m : modes)
        m["ratio_vs_exact"] = m["size"].get<int>() / static_cast<double>(*exact_size);
    out["modes"] = modes;
  } else {
    ModeResult r = run_fd_mode(inst, a.mode, a.seed, a.oversample);
    out.update(fd_mode_json(ni, r));
    if (lp_bound > 1e-9) out["ratio_vs_lp"] = r.solution.count() / lp_bound;
  }

  if (a.pretty)
    print_fd_pretty(ni, out);
  else
    std::cout << out.dump(2) << "\n";
  return 0;
}

int solve_rbsc(const SolveArgs& a, const NamedRbsc& nr) {
  const RBSCInstance& rb = nr.rbsc;
  bool compare = a.compare;
  std::vector<std::string> modes;
  if (compare) {
    if (static_cast<int>(rb.sets.size()) <= 24) modes.push_back("exact");
    modes.push_back("rbsc-greedy");
  } else if (a.mode == "exact" || a.mode == "rbsc-greedy") {
    modes.push_back(a.mode);
  } else {
    throw PreconditionError("mode " + a.mode + " needs an FD instance; RBSC files support exact and rbsc-greedy");
  }

  json rows = json::array();
  std::optional<int> exact_cost;
  for (const std::string& mode : modes) {
    auto start = std::chrono::steady_clock::now();
    RbscSolution sol = mode == "exact" ? exact_rbsc(rb) : rbsc_greedy(rb);
    double ms = elapsed_ms(start);
    if (mode == "exact") exact_cost = sol.red_cost;

    AttrSet touched(rb.num_elements);
    for (int s : sol.chosen) touched |= rb.sets[s] & rb.reds;
    json row = {
        {"mode", mode},
        {"chosen_sets", sol.chosen},
        {"touched_reds", names_json(nr.names, touched)},
        {"size", sol.red_cost},
        {"feasible", rbsc_covers(rb, sol.chosen)},
        {"elapsed_ms", ms},
    };
    rows.push_back(row);
  }
  if (exact_cost && *exact_cost > 0)
    for (json& row : rows)
      row["ratio_vs_exact"] = row["size"].get<int>() / static_cast<double>(*exact_cost);

  json out = {
      {"schema_version", kSchemaVersion},
      {"command", "solve"},
      {"file", a.file},
      {"format", "rbsc"},
      {"elements", rb.num_elements},
      {"reds", rb.reds.count()},
      {"blues", rb.blues.count()},
      {"num_sets", rb.sets.size()},
  };
  if (compare)
    out["modes"] = rows;
  else
    out.update(rows[0]);

  if (a.pretty) {
    std::cout << "file:      " << a.file << "\n"
              << "format:    rbsc (" << rb.reds.count() << " red, " << rb.blues.count()
              << " blue, " << rb.sets.size() << " sets)\n";
    for (const json& row : compare ? out["modes"] : json::array({out})) {
      std::cout << "mode:      " << row["mode"].get<std::string>() << "\n"
                << "sets:      ";
      for (const json& s : row["chosen_sets"]) std::cout << s.get<int>() << " ";
      std::cout << "\nred cost:  " << row["size"].get<int>() << "\n"
                << "feasible:  " << (row["feasible"].get<bool>() ? "yes" : "NO") << "\n";
    }
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_solve(const SolveArgs& a) {
  LoadedFile in = load_file(a.file);
  return in.is_rbsc ? solve_rbsc(a, in.rbsc) : solve_fd(a, in.fd);
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string out_path;  // empty: stdout
  // gap
  int g = 5, depth = 2;
  // vc
  int vertices = 0;
  std::string edges;
  // random
  int n = 10, m = 14, max_lhs = 3;
  double target_fraction = 0.3;
  uint64_t seed = 1;
};

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  for (const std::string& token : split_list(text)) {
    size_t dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= token.size())
      throw ParseError(0, "bad edge (expected u-v): " + token);
    try {
      edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    } catch (const std::exception&) {
      throw ParseError(0, "bad edge (expected u-v): " + token);
    }
  }
  return edges;
}

int emit_instance(const NamedInstance& ni, const std::string& out_path) {
  std::string text = format_instance(ni);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError(0, "cannot open file for writing: " + out_path);
    out << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string suite;
  int repeat = 1;
  bool as_json = false;
};

json bench_cell(const NamedInstance& ni, const std::string& mode, int repeat,
                std::optional<int> exact_size) {
  json samples = json::array();
  ModeResult r;
  for (int k = 0; k < repeat; ++k) {
    r = run_fd_mode(ni.instance, mode, /*seed=*/1, /*oversample=*/2.0);
    samples.push_back(r.ms);
  }
  json cell = {
      {"mode", mode},
      {"size", r.solution.count()},
      {"feasible", r.feasible},
      {"ms", samples},
  };
  if (exact_size && *exact_size > 0)
    cell["ratio_vs_exact"] = r.solution.count() / static_cast<double>(*exact_size);
  return cell;
}

void print_bench_table(const json& rows) {
  std::cout << std::left << std::setw(22) << "instance" << std::setw(12) << "mode" << std::right
            << std::setw(6) << "size" << std::setw(10) << "feasible" << std::setw(10) << "ratio"
            << std::setw(12) << "ms(min)" << "\n";
  for (const json& row : rows) {
    for (const json& cell : row["cells"]) {
      double best = cell["ms"][0].get<double>();
      for (const json& s : cell["ms"]) best = std::min(best, s.get<double>());
      std::cout << std::left << std::setw(22) << row["instance"].get<std::string>()
                << std::setw(12) << cell["mode"].get<std::string>() << std::right << std::setw(6)
                << cell["size"].get<int>() << std::setw(10)
                << (cell["feasible"].get<bool>() ? "yes" : "NO");
      if (cell.contains("ratio_vs_exact"))
        std::cout << std::setw(10) << std::fixed << std::setprecision(3)
                  << cell["ratio_vs_exact"].get<double>() << std::defaultfloat;
      else
        std::cout << std::setw(10) << "-";
      std::cout << std::setw(12) << best << "\n";
    }
  }
}

int cmd_bench(const BenchArgs& a) {
  json rows = json::array();
  if (a.suite == "gap") {
    for (int depth = 1; depth <= 3; ++depth) {
      NamedInstance ni = gen_gap_instance(5, depth);
      int exact_size = exact_tcand(ni.instance).count();
      double lp_bound = lp_lower_bound(ni.instance);
      json row = {
          {"instance", "gap-g5-d" + std::to_string(depth)},
          {"n", ni.instance.n()},
          {"fd_count", ni.instance.fds.size()},
          {"rounds", ni.instance.rounds},
          {"exact", exact_size},
          {"lp_bound", lp_bound},
          {"integrality_ratio", exact_size / lp_bound},
          {"cells", json::array()},
      };
      for (const char* mode : {"exact", "lp-det"})
        row["cells"].push_back(bench_cell(ni, mode, a.repeat, exact_size));
      rows.push_back(row);
    }
  } else if (a.suite == "random-small") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      NamedInstance ni = gen_random_instance(10, 14, 3, 0.35, seed);
      if (seed % 2 == 1) ni.instance.rounds = 1;  // alternate depth-1 and full-depth
      int exact_size = exact_tcand(ni.instance).count();
      json row = {
          {"instance", "random-s" + std::to_string(seed)},
          {"n", ni.instance.n()},
          {"fd_count", ni.instance.fds.size()},
          {"rounds", ni.instance.rounds},
          {"exact", exact_size},
          {"lp_bound", lp_lower_bound(ni.instance)},
          {"cells", json::array()},
      };
      for (const std::string& mode : applicable_modes(ni.instance))
        row["cells"].push_back(bench_cell(ni, mode, a.repeat, exact_size));
      rows.push_back(row);
    }
  } else {
    throw PreconditionError("unknown bench suite: " + a.suite);
  }

  if (a.as_json) {
    json out = {
        {"schema_version", kSchemaVersion},
        {"command", "bench"},
        {"suite", a.suite},
        {"repeat", a.repeat},
        {"rows", rows},
    };
    std::cout << out.dump(2) << "\n";
  } else {
    print_bench_table(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TCAND: targeted least-cardinality candidate keys over functional dependencies"};
  app.require_subcommand(1);

  ClosureArgs closure_args;
  CLI::App* closure_cmd = app.add_subcommand("closure", "Closure of an attribute set");
  closure_cmd->add_option("file", closure_args.file, "FD instance file")->required();
  closure_cmd->add_option("--attrs", closure_args.attrs, "comma-separated attribute names");
  closure_cmd->add_option("--rounds", closure_args.rounds, "inference rounds (default: full)");

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("file", solve_args.file, "FD or RBSC instance file")->required();
  solve_cmd->add_option("--mode", solve_args.mode,
                        "exact | simple | lp-det | lp-rand | rbsc-greedy (default lp-det)");
  solve_cmd->add_option("--seed", solve_args.seed, "seed for lp-rand");
  solve_cmd->add_option("--c", solve_args.oversample, "oversampling constant for lp-rand");
  solve_cmd->add_flag("--compare", solve_args.compare, "run every applicable mode");
  solve_cmd->add_flag("--pretty", solve_args.pretty, "human table instead of JSON");

  GenArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  CLI::App* gap_cmd = gen_cmd->add_subcommand("gap", "layered integrality-gap instance");
  gap_cmd->add_option("--g", gen_args.g, "layer width (default 5)");
  gap_cmd->add_option("--depth", gen_args.depth, "number of layers above the base (default 2)");
  CLI::App* vc_cmd = gen_cmd->add_subcommand("vc", "vertex-cover instance");
  vc_cmd->add_option("--vertices", gen_args.vertices, "vertex count")->required();
  vc_cmd->add_option("--edges", gen_args.edges, "comma-separated u-v pairs")->required();
  CLI::App* rand_cmd = gen_cmd->add_subcommand("random", "seeded random instance");
  rand_cmd->add_option("--n", gen_args.n, "attribute count (default 10)");
  rand_cmd->add_option("--m", gen_args.m, "dependency draws (default 14)");
  rand_cmd->add_option("--max-lhs", gen_args.max_lhs, "max left-side size (default 3)");
  rand_cmd->add_option("--target-fraction", gen_args.target_fraction,
                       "probability each attribute is a target (default 0.3)");
  rand_cmd->add_option("--seed", gen_args.seed, "generator seed (default 1)");
  for (CLI::App* sub : {gap_cmd, vc_cmd, rand_cmd})
    sub->add_option("--out", gen_args.out_path, "output file (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", bench_args.suite, "gap | random-small")->required();
  bench_cmd->add_option("--repeat", bench_args.repeat, "timing samples per cell (default 1)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", bench_args.as_json, "JSON instead of a human table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*closure_cmd) return cmd_closure(closure_args);
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*gen_cmd) {
      if (*gap_cmd) return emit_instance(gen_gap_instance(gen_args.g, gen_args.depth),
                                         gen_args.out_path);
      if (*vc_cmd)
        return emit_instance(gen_vc_instance(gen_args.vertices, parse_edges(gen_args.edges)),
                             gen_args.out_path);
      if (*rand_cmd)
        return emit_instance(
            gen_random_instance(gen_args.n, gen_args.m, gen_args.max_lhs,
                                gen_args.target_fraction, gen_args.seed),
            gen_args.out_path);
    }
    if (*bench_cmd) return cmd_bench(bench_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
