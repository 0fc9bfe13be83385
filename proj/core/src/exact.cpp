#include "scp/exact.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace scp {

namespace {

using Clock = std::chrono::steady_clock;

struct CoverSearch {
  int n;
  int m;
  const std::vector<std::vector<int>>& covers;  // symmetric neighbor lists
  const SearchBudget& budget;
  Clock::time_point start;

  std::vector<int> assign;
  std::vector<std::vector<int>> cover_count;  // per point, per subset
  std::vector<int> covered;                   // subsets covering each point
  std::vector<int> remaining;                 // unassigned neighbors
  long long nodes = 0;
  bool aborted = false;

  CoverSearch(int n, int m, const std::vector<std::vector<int>>& covers,
              const SearchBudget& budget)
      : n(n), m(m), covers(covers), budget(budget), start(Clock::now()) {
    assign.assign(n, -1);
    cover_count.assign(n, std::vector<int>(m, 0));
    covered.assign(n, 0);
    remaining.assign(n, 0);
    for (int p = 0; p < n; ++p) remaining[p] = static_cast<int>(covers[p].size());
  }

  bool over_budget() {
    if (nodes > budget.max_nodes) return true;
    if ((nodes & 0xFFF) == 0) {
      auto elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      if (elapsed > budget.timeout_seconds) return true;
    }
    return false;
  }

  bool dfs(int p) {
    if (p == n) {
      for (int q = 0; q < n; ++q)
        if (covered[q] < m) return false;
      return true;
    }
    for (int q : covers[p]) --remaining[q];
    // Symmetry breaking: the first point goes into the first subset.
    const int subset_limit = (p == 0) ? 1 : m;
    for (int s = 0; s < subset_limit; ++s) {
      ++nodes;
      if (over_budget()) {
        aborted = true;
        break;
      }
      assign[p] = s;
      for (int q : covers[p])
        if (cover_count[q][s]++ == 0) ++covered[q];
      bool viable = true;
      for (int q : covers[p]) {
        if (covered[q] + remaining[q] < m) {
          viable = false;
          break;
        }
      }
      if (viable && dfs(p + 1)) return true;
      for (int q : covers[p])
        if (--cover_count[q][s] == 0) --covered[q];
      assign[p] = -1;
      if (aborted) break;
    }
    for (int q : covers[p]) ++remaining[q];
    return false;
  }
};

}  // namespace

DecideResult exact_decide(const Instance& inst, int m, double r,
                          const SearchBudget& budget) {
  const int n = inst.size();
  if (m < 1 || m > n)
    throw std::invalid_argument("exact_decide: m must be in [1, n]");
  if (r < 0.0) throw std::invalid_argument("exact_decide: radius must be nonnegative");
  if (budget.max_nodes <= 0 || budget.timeout_seconds <= 0.0)
    throw std::invalid_argument("exact_decide: budget must be positive");

  DecideResult result;
  std::vector<std::vector<int>> covers(n);
  for (int p = 0; p < n; ++p) {
    covers[p] = inst.ball(p, r);
    // A point with fewer than m neighbors cannot be covered by m disjoint
    // subsets at this radius.
    if (static_cast<int>(covers[p].size()) < m) {
      result.status = Feasibility::kInfeasible;
      return result;
    }
  }

  CoverSearch search(n, m, covers, budget);
  bool found = search.dfs(0);
  result.nodes = search.nodes;
  if (search.aborted) {
    result.status = Feasibility::kIndeterminate;
    return result;
  }
  if (!found) {
    result.status = Feasibility::kInfeasible;
    return result;
  }
  Partition witness;
  witness.m = m;
  witness.assignment = search.assign;
  result.status = Feasibility::kFeasible;
  result.witness = std::move(witness);
  return result;
}

RadiusResult exact_min_radius(const Instance& inst, int m,
                              const SearchBudget& budget) {
  auto candidates = inst.candidate_radii();
  RadiusResult result;
  // Feasibility is monotone in r, so binary search for the first feasible
  // candidate. The largest candidate is always feasible when m <= n.
  std::size_t lo = 0, hi = candidates.size() - 1;
  std::optional<Partition> witness;
  auto probe = [&](std::size_t i) -> Feasibility {
    auto res = exact_decide(inst, m, candidates[i], budget);
    if (res.status == Feasibility::kFeasible) witness = res.witness;
    return res.status;
  };
  Feasibility at_hi = probe(hi);
  if (at_hi != Feasibility::kFeasible) {
    result.status = at_hi;  // indeterminate, or infeasible is unreachable
    return result;
  }
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    Feasibility status = probe(mid);
    if (status == Feasibility::kIndeterminate) {
      result.status = status;
      return result;
    }
    if (status == Feasibility::kFeasible) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  // Re-probe so the witness matches the minimal radius.
  if (probe(lo) != Feasibility::kFeasible) {
    result.status = Feasibility::kIndeterminate;
    return result;
  }
  result.status = Feasibility::kFeasible;
  result.radius = candidates[lo];
  result.witness = witness;
  return result;
}

MaxPartitionResult exact_max_m(const Instance& inst, double r,
                               const SearchBudget& budget) {
  const int n = inst.size();
  MaxPartitionResult result;
  int upper = n;
  for (int p = 0; p < n; ++p)
    upper = std::min(upper, static_cast<int>(inst.ball(p, r).size()));
  // m = 1 is always feasible: the all-points subset covers at radius 0.
  int best = 1;
  for (int m = 2; m <= upper; ++m) {
    auto res = exact_decide(inst, m, r, budget);
    if (res.status == Feasibility::kIndeterminate) {
      result.status = Feasibility::kIndeterminate;
      return result;
    }
    if (res.status == Feasibility::kInfeasible) break;
    best = m;
  }
  result.status = Feasibility::kFeasible;
  result.max_m = best;
  return result;
}

DomaticResult exact_domatic(const HopGraph& g, int m,
                            const SearchBudget& budget) {
  const int n = g.n;
  if (m < 1 || m > n)
    throw std::invalid_argument("exact_domatic: m must be in [1, n]");
  DomaticResult result;
  auto adj = g.adjacency();
  std::vector<std::vector<int>> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = adj[v];
    closed[v].push_back(v);
    std::sort(closed[v].begin(), closed[v].end());
    if (static_cast<int>(closed[v].size()) < m) {
      result.status = Feasibility::kInfeasible;
      return result;
    }
  }

  // Plain enumeration over subset assignments (exhaustive assignments are
  // lossless: adding leftover vertices to a dominating set keeps it
  // dominating). Vertex 0 is pinned to subset 0.
  std::vector<int> assign(n, 0);
  auto start = Clock::now();
  for (;;) {
    ++result.nodes;
    if (result.nodes > budget.max_nodes ||
        ((result.nodes & 0xFFF) == 0 &&
         std::chrono::duration<double>(Clock::now() - start).count() >
             budget.timeout_seconds)) {
      result.status = Feasibility::kIndeterminate;
      return result;
    }
    bool domatic = true;
    for (int s = 0; s < m && domatic; ++s) {
      for (int v = 0; v < n && domatic; ++v) {
        bool dominated = false;
        for (int w : closed[v]) {
          if (assign[w] == s) {
            dominated = true;
            break;
          }
        }
        if (!dominated) domatic = false;
      }
    }
    if (domatic) {
      Partition witness;
      witness.m = m;
      witness.assignment = assign;
      result.status = Feasibility::kFeasible;
      result.witness = std::move(witness);
      return result;
    }
    int pos = n - 1;
    while (pos >= 1 && assign[pos] == m - 1) assign[pos--] = 0;
    if (pos < 1) break;
    ++assign[pos];
  }
  result.status = Feasibility::kInfeasible;
  return result;
}

}  // namespace scp
