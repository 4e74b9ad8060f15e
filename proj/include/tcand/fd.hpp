#pragma once

#include <vector>

#include "tcand/attr_set.hpp"

namespace tcand {

// Functional dependency lhs -> rhs over attributes [0, n). An empty lhs is
// legal and fires unconditionally.
struct FD {
  AttrSet lhs;
  int rhs = 0;

  friend bool operator==(const FD& a, const FD& b) { return a.rhs == b.rhs && a.lhs == b.lhs; }
};

struct FDSet {
  int n = 0;  // universe size
  std::vector<FD> fds;

  int size() const { return static_cast<int>(fds.size()); }
};

// Dependency as read from input, before right sides are split.
struct RawFD {
  AttrSet lhs;
  AttrSet rhs;
};

// Split multi-attribute right sides into single-rhs FDs, drop exact self-FDs
// {i} -> i and duplicates, keep first-appearance order.
FDSet normalize(int n, const std::vector<RawFD>& raw);

struct Instance {
  FDSet fds;
  AttrSet targets;
  int rounds = 0;  // inference depth D in [1, n]; 0 only for the empty universe

  int n() const { return fds.n; }
  // Throws PreconditionError when attribute ids, set widths, or rounds are out
  // of range.
  void validate() const;
};

struct Stats {
  int f = 0;        // max number of FDs sharing one right side
  int delta = 0;    // max number of other distinct left sides one left side intersects
  int distinct_ls = 0;
};

Stats stats(const FDSet& fds);

// Distinct left sides in first-appearance order.
std::vector<AttrSet> distinct_left_sides(const FDSet& fds);

}  // namespace tcand
