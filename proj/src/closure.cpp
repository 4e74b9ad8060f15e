#include "tcand/closure.hpp"

#include <vector>

namespace tcand {

AttrSet one_step_closure(const AttrSet& x, const FDSet& fds) {
  AttrSet out = x;
  for (const FD& fd : fds.fds)
    if (fd.lhs.is_subset_of(x)) out.set(fd.rhs);
  return out;
}

AttrSet closure(const AttrSet& x, const FDSet& fds, ClosureWork* work) {
  const int m = fds.size();
  AttrSet result = x;
  std::vector<int> missing(m);
  std::vector<std::vector<int>> fds_with(fds.n);  // attr -> FDs listing it on the left
  std::vector<int> queue;
  queue.reserve(fds.n);

  for (int k = 0; k < m; ++k) {
    const FD& fd = fds.fds[k];
    missing[k] = fd.lhs.count();
    fd.lhs.for_each([&](int i) { fds_with[i].push_back(k); });
    if (missing[k] == 0 && !result.test(fd.rhs)) {  // empty left side fires now
      result.set(fd.rhs);
      queue.push_back(fd.rhs);
    }
  }
  x.for_each([&](int i) { queue.push_back(i); });

  for (size_t head = 0; head < queue.size(); ++head) {
    int i = queue[head];
    for (int k : fds_with[i]) {
      if (work) ++work->lhs_decrements;
      if (--missing[k] == 0) {
        int b = fds.fds[k].rhs;
        if (!result.test(b)) {
          result.set(b);
          queue.push_back(b);
        }
      }
    }
  }
  return result;
}

AttrSet bounded_closure(const AttrSet& x, const FDSet& fds, int rounds) {
  AttrSet cur = x;
  for (int r = 0; r < rounds; ++r) {
    AttrSet next = one_step_closure(cur, fds);
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

bool is_feasible(const AttrSet& x, const Instance& inst) {
  return inst.targets.is_subset_of(bounded_closure(x, inst.fds, inst.rounds));
}

}  // namespace tcand
