#include "tcand/fd.hpp"

#include <map>
#include <string>

#include "tcand/errors.hpp"

namespace tcand {

FDSet normalize(int n, const std::vector<RawFD>& raw) {
  FDSet out;
  out.n = n;
  std::map<std::pair<AttrSet, int>, bool> seen;
  for (const RawFD& r : raw) {
    r.rhs.for_each([&](int b) {
      if (r.lhs.count() == 1 && r.lhs.test(b)) return;  // self-FD {b} -> b
      if (seen.emplace(std::make_pair(r.lhs, b), true).second)
        out.fds.push_back(FD{r.lhs, b});
    });
  }
  return out;
}

void Instance::validate() const {
  int nn = fds.n;
  if (nn < 0) throw PreconditionError("negative universe size");
  if (targets.universe_size() != nn)
    throw PreconditionError("target set width " + std::to_string(targets.universe_size()) +
                            " does not match universe size " + std::to_string(nn));
  for (const FD& fd : fds.fds) {
    if (fd.lhs.universe_size() != nn)
      throw PreconditionError("FD left side width does not match universe size");
    if (fd.rhs < 0 || fd.rhs >= nn)
      throw PreconditionError("FD right side attribute " + std::to_string(fd.rhs) +
                              " out of range");
  }
  if (nn == 0) {
    if (rounds != 0) throw PreconditionError("rounds must be 0 for an empty universe");
  } else if (rounds < 1 || rounds > nn) {
    throw PreconditionError("rounds " + std::to_string(rounds) + " out of range [1, " +
                            std::to_string(nn) + "]");
  }
}

std::vector<AttrSet> distinct_left_sides(const FDSet& fds) {
  std::vector<AttrSet> out;
  std::map<AttrSet, int> seen;
  for (const FD& fd : fds.fds)
    if (seen.emplace(fd.lhs, 0).second) out.push_back(fd.lhs);
  return out;
}

Stats stats(const FDSet& fds) {
  Stats s;
  std::vector<int> into(fds.n, 0);
  for (const FD& fd : fds.fds) {
    ++into[fd.rhs];
    if (into[fd.rhs] > s.f) s.f = into[fd.rhs];
  }
  std::vector<AttrSet> ls = distinct_left_sides(fds);
  s.distinct_ls = static_cast<int>(ls.size());
  for (size_t i = 0; i < ls.size(); ++i) {
    int deg = 0;
    for (size_t j = 0; j < ls.size(); ++j)
      if (j != i && ls[i].intersects(ls[j])) ++deg;
    if (deg > s.delta) s.delta = deg;
  }
  return s;
}

}  // namespace tcand
