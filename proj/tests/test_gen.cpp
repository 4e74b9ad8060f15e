#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"
#include "tcand/gen.hpp"
#include "tcand/oracle.hpp"
#include "tcand/parse.hpp"
#include "tcand/rng.hpp"

using namespace tcand;

namespace {

// Brute-force minimum vertex cover size.
int min_vertex_cover(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        covers = false;
        break;
      }
    if (covers) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("gap instance counts and balance") {
  NamedInstance one = gen_gap_instance(5, 1);
  CHECK(one.instance.n() == 10);
  CHECK(one.instance.fds.size() == 10);
  CHECK(one.instance.rounds == 1);
  CHECK(one.instance.targets.count() == 5);

  NamedInstance deep = gen_gap_instance(5, 3);
  CHECK(deep.instance.n() == 20);
  CHECK(deep.instance.fds.size() == 30);
  CHECK(deep.instance.rounds == 3);

  // every variable above the base layer is fed by exactly two pair FDs,
  // each pair is used once, and both feeders always contain the column itself
  for (const NamedInstance* ni : {&one, &deep}) {
    const Instance& inst = ni->instance;
    int g = 5;
    std::vector<int> indeg(inst.n(), 0);
    std::set<AttrSet> seen_lhs;
    for (const FD& fd : inst.fds.fds) {
      ++indeg[fd.rhs];
      CHECK(fd.lhs.count() == 2);
      CHECK(fd.lhs.test(fd.rhs % g + (fd.rhs / g - 1) * g));
      CHECK(seen_lhs.insert(fd.lhs).second);
    }
    for (int i = 0; i < inst.n(); ++i) CHECK(indeg[i] == (i < g ? 0 : 2));
  }
}

TEST_CASE("gap instance distributes three-wide layers one pair per column") {
  NamedInstance ni = gen_gap_instance(3, 1);
  CHECK(ni.instance.n() == 6);
  CHECK(ni.instance.fds.size() == 3);
  std::vector<int> indeg(6, 0);
  for (const FD& fd : ni.instance.fds.fds) ++indeg[fd.rhs];
  for (int i = 3; i < 6; ++i) CHECK(indeg[i] == 1);
  CHECK_THROWS_AS(gen_gap_instance(2, 1), PreconditionError);
  CHECK_THROWS_AS(gen_gap_instance(5, 0), PreconditionError);
}

TEST_CASE("gap instance names pin the grid") {
  NamedInstance ni = gen_gap_instance(4, 2);
  CHECK(ni.names[0] == "x0r0");
  CHECK(ni.names[5] == "x1r1");
  CHECK(ni.names[11] == "x3r2");
  // even widths stay balanced within one pair
  std::vector<int> indeg(ni.instance.n(), 0);
  for (const FD& fd : ni.instance.fds.fds) ++indeg[fd.rhs];
  for (int i = 4; i < ni.instance.n(); ++i) {
    CHECK(indeg[i] >= 1);
    CHECK(indeg[i] <= 2);
  }
}

TEST_CASE("vertex cover instance shapes a triangle") {
  NamedInstance ni = gen_vc_instance(3, {{0, 1}, {1, 2}, {0, 2}});
  const Instance& inst = ni.instance;
  CHECK(inst.n() == 6);
  CHECK(inst.fds.size() == 6);  // two endpoint FDs per edge
  CHECK(inst.rounds == 1);
  CHECK(inst.targets == AttrSet::of(6, {3, 4, 5}));
  CHECK(ni.names[0] == "v0");
  CHECK(ni.names[3] == "e0_1");
  CHECK(exact_tcand(inst).count() == 2);
}

TEST_CASE("vertex cover instance dedupes and canonicalizes edges") {
  NamedInstance ni = gen_vc_instance(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(ni.instance.fds.size() == 4);
  CHECK(ni.names[3] == "e0_1");
  CHECK(ni.names[4] == "e1_2");
  CHECK_THROWS_AS(gen_vc_instance(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(gen_vc_instance(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("vertex cover instances agree with brute force on stars and paths") {
  std::vector<std::pair<int, int>> star = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK(exact_tcand(gen_vc_instance(5, star).instance).count() == 1);
  CHECK(min_vertex_cover(5, star) == 1);

  std::vector<std::pair<int, int>> edge = {{0, 1}};
  CHECK(exact_tcand(gen_vc_instance(2, edge).instance).count() == 1);

  Rng rng(20406);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 2 + static_cast<int>(rng.next_below(5));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_bernoulli(0.5)) edges.emplace_back(u, v);
    NamedInstance ni = gen_vc_instance(n, edges);
    CHECK(exact_tcand(ni.instance).count() == min_vertex_cover(n, edges));
  }
}

TEST_CASE("random instances are deterministic per seed") {
  NamedInstance a = gen_random_instance(9, 14, 3, 0.4, 123456);
  NamedInstance b = gen_random_instance(9, 14, 3, 0.4, 123456);
  CHECK(format_instance(a) == format_instance(b));
  NamedInstance c = gen_random_instance(9, 14, 3, 0.4, 123457);
  CHECK(format_instance(a) != format_instance(c));
}

TEST_CASE("random instances respect their parameters") {
  Rng rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 2 + static_cast<int>(rng.next_below(10));
    int max_lhs = 1 + static_cast<int>(rng.next_below(n));
    NamedInstance ni = gen_random_instance(n, 8, max_lhs, 0.5, rng.next_u64());
    CHECK(ni.instance.n() == n);
    CHECK(ni.instance.rounds == n);
    CHECK(ni.instance.fds.size() <= 8);  // duplicates may collapse
    for (const FD& fd : ni.instance.fds.fds) {
      CHECK(fd.lhs.count() >= 1);
      CHECK(fd.lhs.count() <= max_lhs);
      CHECK_FALSE(fd.lhs.test(fd.rhs));
    }
  }
}

TEST_CASE("random instance parameter validation") {
  CHECK_THROWS_AS(gen_random_instance(0, 0, 1, 0.5, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_instance(3, -1, 1, 0.5, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_instance(3, 2, 0, 0.5, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_instance(3, 2, 4, 0.5, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_instance(3, 2, 2, 1.5, 1), PreconditionError);
  CHECK_THROWS_AS(gen_random_instance(1, 1, 1, 0.5, 1), PreconditionError);
  CHECK(gen_random_instance(1, 0, 1, 1.0, 1).instance.targets.count() == 1);
}

TEST_CASE("generated instances survive a text round trip") {
  for (const NamedInstance& ni :
       {gen_gap_instance(5, 2), gen_vc_instance(4, {{0, 1}, {1, 2}, {2, 3}}),
        gen_random_instance(7, 9, 3, 0.4, 42)}) {
    NamedInstance back = parse_instance_text(format_instance(ni));
    CHECK(back.names == ni.names);
    CHECK(back.instance.rounds == ni.instance.rounds);
    CHECK(back.instance.targets == ni.instance.targets);
    REQUIRE(back.instance.fds.size() == ni.instance.fds.size());
    for (int k = 0; k < ni.instance.fds.size(); ++k) {
      CHECK(back.instance.fds.fds[k].lhs == ni.instance.fds.fds[k].lhs);
      CHECK(back.instance.fds.fds[k].rhs == ni.instance.fds.fds[k].rhs);
    }
  }
}
