#include "tcand/redblue.hpp"

#include <string>

#include "tcand/errors.hpp"

namespace tcand {

void RBSCInstance::validate() const {
  if (num_elements < 0) throw PreconditionError("negative element count");
  if (reds.universe_size() != num_elements || blues.universe_size() != num_elements)
    throw PreconditionError("red/blue set width does not match element count");
  if (reds.intersects(blues)) throw PreconditionError("an element is both red and blue");
  if ((reds | blues).count() != num_elements)
    throw PreconditionError("an element is neither red nor blue");
  for (const AttrSet& s : sets)
    if (s.universe_size() != num_elements)
      throw PreconditionError("set width does not match element count");
}

TcandToRbsc tcand_to_rbsc(const Instance& inst) {
  inst.validate();
  if (inst.n() > 0 && inst.rounds != 1)
    throw PreconditionError("reduction to red-blue set cover needs rounds = 1, got " +
                            std::to_string(inst.rounds));
  const int n = inst.n();
  const int t = inst.targets.count();
  const int u = n + t;

  TcandToRbsc out;
  out.rbsc.num_elements = u;
  out.rbsc.reds = AttrSet(u);
  out.rbsc.blues = AttrSet(u);
  for (int i = 0; i < n; ++i) out.rbsc.reds.set(i);
  out.blue_of_target.assign(n, -1);
  {
    int next = n;
    inst.targets.for_each([&](int i) {
      out.blue_of_target[i] = next;
      out.rbsc.blues.set(next);
      ++next;
    });
  }

  auto widen = [&](const AttrSet& s) {
    AttrSet w(u);
    s.for_each([&](int i) { w.set(i); });
    return w;
  };
  for (int k = 0; k < inst.fds.size(); ++k) {
    const FD& fd = inst.fds.fds[k];
    if (!inst.targets.test(fd.rhs)) continue;  // FDs into non-targets never help at depth 1
    AttrSet s = widen(fd.lhs);
    s.set(out.blue_of_target[fd.rhs]);
    out.rbsc.sets.push_back(std::move(s));
    out.set_fd.push_back(k);
  }
  inst.targets.for_each([&](int i) {  // choosing the target attribute itself
    AttrSet s(u);
    s.set(i);
    s.set(out.blue_of_target[i]);
    out.rbsc.sets.push_back(std::move(s));
    out.set_fd.push_back(-1);
  });
  return out;
}

RbscToTcand rbsc_to_tcand(const RBSCInstance& rb) {
  rb.validate();
  const int u = rb.num_elements;

  RbscToTcand out;
  out.group_of.assign(u, {});
  int n = u;
  rb.blues.for_each([&](int b) {
    int cheapest = -1;  // red cost of the cheapest set covering b; -1 when uncoverable
    for (const AttrSet& s : rb.sets)
      if (s.test(b)) {
        int cost = s.intersect_count(rb.reds);
        if (cheapest < 0 || cost < cheapest) cheapest = cost;
      }
    out.group_of[b].push_back(b);
    for (int extra = 0; extra < cheapest; ++extra) out.group_of[b].push_back(n++);
  });

  std::vector<RawFD> raw;
  for (const AttrSet& s : rb.sets) {
    RawFD fd{AttrSet(n), AttrSet(n)};
    (s & rb.reds).for_each([&](int r) { fd.lhs.set(r); });
    (s & rb.blues).for_each([&](int b) {
      for (int g : out.group_of[b]) fd.rhs.set(g);
    });
    if (!fd.rhs.empty()) raw.push_back(std::move(fd));
  }
  out.instance.fds = normalize(n, raw);
  out.instance.targets = AttrSet(n);
  for (int b = 0; b < u; ++b)
    for (int g : out.group_of[b]) out.instance.targets.set(g);
  out.instance.rounds = n > 0 ? 1 : 0;
  return out;
}

RbscSolution rbsc_greedy(const RBSCInstance& rb) {
  rb.validate();
  AttrSet all(rb.num_elements);
  for (const AttrSet& s : rb.sets) all |= s;
  if (!rb.blues.is_subset_of(all))
    throw InfeasibleError("some blue element is in no set");

  // Free sets (no new reds) rank above everything; otherwise larger
  // gain/cost wins, compared exactly by cross-multiplication.
  auto better = [](long gain, long cost, long best_gain, long best_cost) {
    if ((cost == 0) != (best_cost == 0)) return cost == 0;
    if (cost == 0) return gain > best_gain;
    return gain * best_cost > best_gain * cost;
  };

  RbscSolution out;
  AttrSet covered(rb.num_elements);  // blues covered so far
  AttrSet paid(rb.num_elements);     // reds already paid for
  int missing = rb.blues.count();
  while (missing > 0) {
    int best = -1;
    long best_gain = 0, best_cost = 1;
    for (size_t s = 0; s < rb.sets.size(); ++s) {
      AttrSet nb = rb.sets[s] & rb.blues;
      nb.subtract(covered);
      long gain = nb.count();
      if (gain == 0) continue;
      AttrSet nr = rb.sets[s] & rb.reds;
      nr.subtract(paid);
      long cost = nr.count();
      if (best < 0 || better(gain, cost, best_gain, best_cost)) {
        best_gain = gain;
        best_cost = cost;
        best = static_cast<int>(s);
      }
    }
    // best >= 0: some set still adds a blue, since all blues are coverable.
    out.chosen.push_back(best);
    covered |= rb.sets[best] & rb.blues;
    paid |= rb.sets[best] & rb.reds;
    missing = rb.blues.count() - covered.count();
  }
  out.red_cost = paid.count();
  return out;
}

int rbsc_cost(const RBSCInstance& rb, const std::vector<int>& chosen) {
  AttrSet u(rb.num_elements);
  for (int s : chosen) u |= rb.sets[s];
  return u.intersect_count(rb.reds);
}

bool rbsc_covers(const RBSCInstance& rb, const std::vector<int>& chosen) {
  AttrSet u(rb.num_elements);
  for (int s : chosen) u |= rb.sets[s];
  return rb.blues.is_subset_of(u);
}

}  // namespace tcand
