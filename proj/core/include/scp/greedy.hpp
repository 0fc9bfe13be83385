#pragma once

#include <utility>
#include <vector>

#include "scp/cover.hpp"
#include "scp/instance.hpp"

namespace scp {

// Record of a farthest-point center selection run.
struct GreedyTrace {
  std::vector<int> centers;                // selected centers, in order
  std::vector<double> separation_radii;    // r_i at selection time; [0] is +inf
  std::vector<std::pair<int, int>> assignment_log;  // (point, subset), in order
};

struct GreedyResult {
  bool feasible = false;
  Partition partition;  // meaningful only when feasible
  GreedyTrace trace;
};

// Farthest-point solidarity cover at a fixed radius. If an m-solidarity-
// r-cover exists a partition is returned; any returned partition is an
// m-solidarity-3r-cover. Deterministic: the first center is the lowest
// index and argmax ties break to the lowest index.
GreedyResult greedy_sc(const Instance& inst, int m, double r);

struct MinRadiusResult {
  double radius = 0.0;
  Partition partition;
  int candidates_scanned = 0;
};

// Smallest candidate radius at which greedy_sc succeeds (always exists).
// Guarantees radius <= 3 * optimal. threads > 1 evaluates candidates in
// parallel; the reported minimum is schedule-independent.
MinRadiusResult min_radius_greedy(const Instance& inst, int m, int threads = 1);

}  // namespace scp
