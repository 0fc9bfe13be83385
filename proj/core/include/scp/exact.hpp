#pragma once

#include <optional>

#include "scp/cover.hpp"
#include "scp/instance.hpp"

namespace scp {

struct SearchBudget {
  long long max_nodes = 20'000'000;
  double timeout_seconds = 60.0;
};

// Budget exhaustion is a first-class outcome, never a silent "infeasible".
enum class Feasibility { kFeasible, kInfeasible, kIndeterminate };

struct DecideResult {
  Feasibility status = Feasibility::kIndeterminate;
  std::optional<Partition> witness;  // present iff feasible
  long long nodes = 0;
};

// Backtracking decision: does an m-solidarity-r-cover exist? Points are
// assigned in ascending index, subsets tried in ascending index, the first
// point forced into subset 0. Prunes when a point's covered subsets plus
// its unassigned neighbors cannot reach m.
DecideResult exact_decide(const Instance& inst, int m, double r,
                          const SearchBudget& budget = {});

struct RadiusResult {
  Feasibility status = Feasibility::kIndeterminate;
  double radius = 0.0;
  std::optional<Partition> witness;
};

// Smallest candidate radius with exact_decide true (binary search; exact
// feasibility is monotone in r).
RadiusResult exact_min_radius(const Instance& inst, int m,
                              const SearchBudget& budget = {});

struct MaxPartitionResult {
  Feasibility status = Feasibility::kIndeterminate;
  int max_m = 0;
};

// Largest m with exact_decide true; a priori bounded by the smallest ball.
MaxPartitionResult exact_max_m(const Instance& inst, double r,
                               const SearchBudget& budget = {});

struct DomaticResult {
  Feasibility status = Feasibility::kIndeterminate;
  std::optional<Partition> witness;
  long long nodes = 0;
};

// Does the graph admit m disjoint dominating sets? Independent of the
// metric machinery: plain enumeration over subset assignments checked
// against closed neighborhoods.
DomaticResult exact_domatic(const HopGraph& g, int m,
                            const SearchBudget& budget = {});

}  // namespace scp
