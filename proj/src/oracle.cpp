#include "tcand/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tcand/closure.hpp"
#include "tcand/errors.hpp"

namespace tcand {

AttrSet exact_tcand(const Instance& inst) {
  inst.validate();
  const int n = inst.n();
  if (n > kMaxExactAttrs)
    throw PreconditionError("exact solver limited to " + std::to_string(kMaxExactAttrs) +
                            " attributes, got " + std::to_string(n));
  if (!is_feasible(AttrSet::full(n), inst))
    throw InfeasibleError("targets not derivable even from the full attribute set");

  // Attributes outside every left side that are not targets never help.
  AttrSet useful = inst.targets;
  for (const FD& fd : inst.fds.fds) useful |= fd.lhs;
  std::vector<int> cand = useful.to_vector();
  const int c = static_cast<int>(cand.size());

  for (int k = 0; k <= c; ++k) {
    // k-combinations of cand in lexicographic order.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      AttrSet x(n);
      for (int i : idx) x.set(cand[i]);
      if (is_feasible(x, inst)) return x;

      int pos = k - 1;
      while (pos >= 0 && idx[pos] == c - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  // Unreachable: the useful set itself is feasible whenever the full set is,
  // since useless attributes never enable an FD or satisfy a target.
  throw InternalError("exact_tcand exhausted candidates on a feasible instance");
}

RbscSolution exact_rbsc(const RBSCInstance& rb) {
  rb.validate();
  const int m = static_cast<int>(rb.sets.size());
  if (m > kMaxExactSets)
    throw PreconditionError("exact solver limited to " + std::to_string(kMaxExactSets) +
                            " sets, got " + std::to_string(m));
  AttrSet all(rb.num_elements);
  for (const AttrSet& s : rb.sets) all |= s;
  if (!rb.blues.is_subset_of(all))
    throw InfeasibleError("some blue element is in no set");

  auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    size_t k = std::min(a.size(), b.size());
    for (size_t i = 0; i < k; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
  };

  bool have = false;
  RbscSolution best;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    AttrSet u(rb.num_elements);
    std::vector<int> chosen;
    for (int s = 0; s < m; ++s)
      if (mask >> s & 1) {
        u |= rb.sets[s];
        chosen.push_back(s);
      }
    if (!rb.blues.is_subset_of(u)) continue;
    int cost = u.intersect_count(rb.reds);
    if (!have || cost < best.red_cost ||
        (cost == best.red_cost && (chosen.size() < best.chosen.size() ||
                                   (chosen.size() == best.chosen.size() &&
                                    lex_less(chosen, best.chosen))))) {
      have = true;
      best.red_cost = cost;
      best.chosen = std::move(chosen);
    }
  }
  return best;
}

}  // namespace tcand
