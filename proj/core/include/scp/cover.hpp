#pragma once

#include <vector>

#include "scp/instance.hpp"

namespace scp {

// Assignment of each point to one of m disjoint subsets, or to none.
// Disjointness holds by representation; subsets need not exhaust the points.
struct Partition {
  static constexpr int kUnassigned = -1;

  int m = 1;
  std::vector<int> assignment;  // subset index in [0, m) or kUnassigned

  bool well_formed(int n) const;
  bool all_assigned() const;
};

// Members of each subset, sorted ascending.
std::vector<std::vector<int>> subsets_of(const Partition& p);

// True iff every point of the instance is within r of some member of subset.
bool is_r_cover(const Instance& inst, const std::vector<int>& subset, double r);

// True iff every subset of the partition is an r-cover.
bool is_solidarity_cover(const Instance& inst, const Partition& p, double r);

// Number of subsets containing a point within r of pt.
int coverage_count(const Instance& inst, const Partition& p, double r, int pt);

// Minimal radius at which p is a solidarity cover:
// max over points, over subsets, of the min distance to the subset.
// Throws std::invalid_argument when some subset is empty.
double cover_radius(const Instance& inst, const Partition& p);

}  // namespace scp
