#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"
#include "tcand/gen.hpp"
#include "tcand/oracle.hpp"
#include "tcand/rng.hpp"

using namespace tcand;

namespace {

Instance chain_instance(int rounds) {  // a -> b, b -> c, target c
  Instance inst;
  inst.fds.n = 3;
  inst.fds.fds.push_back(FD{AttrSet::of(3, {0}), 1});
  inst.fds.fds.push_back(FD{AttrSet::of(3, {1}), 2});
  inst.targets = AttrSet::of(3, {2});
  inst.rounds = rounds;
  return inst;
}

// Minimum feasible size by scanning every subset; independent of the
// cardinality-major enumeration in the oracle.
int brute_min_size(const Instance& inst) {
  int n = inst.n();
  int best = n + 1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    AttrSet x(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) x.set(i);
    if (is_feasible(x, inst)) best = std::min(best, x.count());
  }
  return best;
}

// Lexicographically least optimum under "compare sorted id vectors".
AttrSet brute_lex_optimum(const Instance& inst, int opt_size) {
  int n = inst.n();
  AttrSet best(n);
  bool have = false;
  auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
  };
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    AttrSet x(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) x.set(i);
    if (x.count() != opt_size || !is_feasible(x, inst)) continue;
    if (!have || lex_less(x.to_vector(), best.to_vector())) {
      best = x;
      have = true;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("exact solver walks the chain at full depth") {
  CHECK(exact_tcand(chain_instance(3)) == AttrSet::of(3, {0}));
}

TEST_CASE("exact solver respects the depth bound") {
  CHECK(exact_tcand(chain_instance(1)) == AttrSet::of(3, {1}));
  CHECK(exact_tcand(chain_instance(2)) == AttrSet::of(3, {0}));
}

TEST_CASE("exact solver with no FDs picks the targets") {
  Instance inst;
  inst.fds.n = 4;
  inst.targets = AttrSet::of(4, {1, 3});
  inst.rounds = 4;
  CHECK(exact_tcand(inst) == inst.targets);
}

TEST_CASE("exact solver returns empty for empty targets") {
  Instance inst;
  inst.fds.n = 3;
  inst.targets = AttrSet(3);
  inst.rounds = 3;
  CHECK(exact_tcand(inst).empty());
}

TEST_CASE("exact solver refuses oversized instances") {
  Instance inst;
  inst.fds.n = 25;
  inst.targets = AttrSet(25);
  inst.rounds = 25;
  CHECK_THROWS_AS(exact_tcand(inst), PreconditionError);
}

TEST_CASE("exact solver matches brute force and is lexicographically least") {
  Rng rng(1031);
  for (int iter = 0; iter < 250; ++iter) {
    int n = 2 + static_cast<int>(rng.next_below(7));
    NamedInstance ni = gen_random_instance(n, 2 + static_cast<int>(rng.next_below(10)),
                                           std::min(3, n - 1), 0.4, rng.next_u64());
    Instance inst = ni.instance;
    inst.rounds = 1 + static_cast<int>(rng.next_below(n));
    AttrSet got = exact_tcand(inst);
    CHECK(is_feasible(got, inst));
    int opt = brute_min_size(inst);
    CHECK(got.count() == opt);
    CHECK(got == brute_lex_optimum(inst, opt));
  }
}

TEST_CASE("deeper inference never needs more attributes") {
  Rng rng(2207);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 3 + static_cast<int>(rng.next_below(6));
    NamedInstance ni = gen_random_instance(n, 3 + static_cast<int>(rng.next_below(9)),
                                           std::min(3, n - 1), 0.4, rng.next_u64());
    Instance inst = ni.instance;
    int prev = n + 1;
    for (int d = 1; d <= n; ++d) {
      inst.rounds = d;
      int size = exact_tcand(inst).count();
      CHECK(size <= prev);
      prev = size;
    }
  }
}

TEST_CASE("rbsc oracle prefers cheap covers, then fewer sets, then low indices") {
  RBSCInstance rb;
  rb.num_elements = 3;  // r1 r2 red, b blue
  rb.reds = AttrSet::of(3, {0, 1});
  rb.blues = AttrSet::of(3, {2});
  rb.sets = {AttrSet::of(3, {0, 2}), AttrSet::of(3, {0, 1, 2})};
  RbscSolution sol = exact_rbsc(rb);
  CHECK(sol.red_cost == 1);
  CHECK(sol.chosen == std::vector<int>{0});

  // equal cost: the single-set cover beats the two-set cover
  RBSCInstance fewer;
  fewer.num_elements = 4;  // r0 red; b1 b2 b3 blue
  fewer.reds = AttrSet::of(4, {0});
  fewer.blues = AttrSet::of(4, {1, 2, 3});
  fewer.sets = {AttrSet::of(4, {0, 1}), AttrSet::of(4, {0, 2, 3}), AttrSet::of(4, {0, 1, 2, 3})};
  RbscSolution few = exact_rbsc(fewer);
  CHECK(few.red_cost == 1);
  CHECK(few.chosen == std::vector<int>{2});

  // equal cost and set count: lexicographically smaller index vector wins
  RBSCInstance tie;
  tie.num_elements = 4;
  tie.reds = AttrSet::of(4, {0});
  tie.blues = AttrSet::of(4, {1, 2, 3});
  tie.sets = {AttrSet::of(4, {0, 1}), AttrSet::of(4, {0, 1, 2, 3}), AttrSet::of(4, {0, 1, 2, 3})};
  RbscSolution t = exact_rbsc(tie);
  CHECK(t.red_cost == 1);
  CHECK(t.chosen == std::vector<int>{1});
}

TEST_CASE("rbsc oracle covers empty blues for free") {
  RBSCInstance rb;
  rb.num_elements = 2;
  rb.reds = AttrSet::of(2, {0, 1});
  rb.blues = AttrSet(2);
  rb.sets = {AttrSet::of(2, {0})};
  RbscSolution sol = exact_rbsc(rb);
  CHECK(sol.red_cost == 0);
  CHECK(sol.chosen.empty());
}

TEST_CASE("rbsc oracle reports uncoverable blues") {
  RBSCInstance rb;
  rb.num_elements = 2;
  rb.reds = AttrSet::of(2, {0});
  rb.blues = AttrSet::of(2, {1});
  rb.sets = {AttrSet::of(2, {0})};
  CHECK_THROWS_AS(exact_rbsc(rb), InfeasibleError);
}

TEST_CASE("rbsc oracle refuses too many sets") {
  RBSCInstance rb;
  rb.num_elements = 1;
  rb.reds = AttrSet::of(1, {0});
  rb.blues = AttrSet(1);
  rb.sets.assign(25, AttrSet::of(1, {0}));
  CHECK_THROWS_AS(exact_rbsc(rb), PreconditionError);
}

TEST_CASE("rbsc oracle cost matches a red-subset scan") {
  Rng rng(97);
  for (int iter = 0; iter < 200; ++iter) {
    int nr = 1 + static_cast<int>(rng.next_below(5));
    int nb = 1 + static_cast<int>(rng.next_below(4));
    int u = nr + nb;
    RBSCInstance rb;
    rb.num_elements = u;
    rb.reds = AttrSet(u);
    rb.blues = AttrSet(u);
    for (int i = 0; i < nr; ++i) rb.reds.set(i);
    for (int i = nr; i < u; ++i) rb.blues.set(i);
    int m = 1 + static_cast<int>(rng.next_below(5));
    for (int s = 0; s < m; ++s) {
      AttrSet set(u);
      for (int e = 0; e < u; ++e)
        if (rng.next_bernoulli(0.4)) set.set(e);
      rb.sets.push_back(set);
    }
    AttrSet all(u);
    for (const AttrSet& s : rb.sets) all |= s;
    if (!rb.blues.is_subset_of(all)) {
      CHECK_THROWS_AS(exact_rbsc(rb), InfeasibleError);
      continue;
    }
    RbscSolution sol = exact_rbsc(rb);
    CHECK(rbsc_covers(rb, sol.chosen));
    CHECK(rbsc_cost(rb, sol.chosen) == sol.red_cost);

    // independent scan: cheapest red budget whose affordable sets cover the blues
    int best = nr + 1;
    for (uint32_t mask = 0; mask < (1u << nr); ++mask) {
      AttrSet budget(u);
      for (int i = 0; i < nr; ++i)
        if (mask >> i & 1) budget.set(i);
      AttrSet covered(u);
      for (const AttrSet& s : rb.sets)
        if ((s & rb.reds).is_subset_of(budget)) covered |= s;
      if (rb.blues.is_subset_of(covered))
        best = std::min(best, budget.count());
    }
    CHECK(sol.red_cost == best);
  }
}
