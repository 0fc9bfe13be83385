#include "scp/greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "candidate_scan.hpp"

namespace scp {

GreedyResult greedy_sc(const Instance& inst, int m, double r) {
  const int n = inst.size();
  if (m < 1 || m > n) throw std::invalid_argument("greedy_sc: m must be in [1, n]");
  if (r < 0.0) throw std::invalid_argument("greedy_sc: radius must be nonnegative");

  GreedyResult result;
  GreedyTrace& trace = result.trace;

  // Farthest-point center selection. A candidate joins the center set only
  // while its separation exceeds 2r; on the while-condition exit path the
  // selected point was never added, on the exhaustion path it was.
  std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
  std::vector<char> selected(n, 0);
  int candidate = 0;  // p_1: lowest index
  double separation = std::numeric_limits<double>::infinity();
  while (!inst.within(separation, 2.0 * r)) {
    trace.centers.push_back(candidate);
    trace.separation_radii.push_back(separation);
    selected[candidate] = 1;
    if (static_cast<int>(trace.centers.size()) == n) break;
    for (int p = 0; p < n; ++p)
      min_dist[p] = std::min(min_dist[p], inst.distance(candidate, p));
    int next = -1;
    double best = -1.0;
    for (int p = 0; p < n; ++p) {
      if (selected[p]) continue;
      if (min_dist[p] > best) {  // ties break to the lowest index
        best = min_dist[p];
        next = p;
      }
    }
    candidate = next;
    separation = best;
  }

  Partition partition;
  partition.m = m;
  partition.assignment.assign(n, Partition::kUnassigned);

  std::vector<char> in_ball(n, 0);
  for (int center : trace.centers) {
    auto members = inst.ball(center, r);
    if (static_cast<int>(members.size()) < m) {
      result.feasible = false;
      return result;
    }
    // ball() returns ascending indices; member j goes to subset j mod m, so
    // each subset receives at least one member.
    for (std::size_t j = 0; j < members.size(); ++j) {
      int subset = static_cast<int>(j) % m;
      partition.assignment[members[j]] = subset;
      in_ball[members[j]] = 1;
      trace.assignment_log.emplace_back(members[j], subset);
    }
  }
  int round_robin = 0;
  for (int p = 0; p < n; ++p) {
    if (in_ball[p]) continue;
    int subset = round_robin++ % m;
    partition.assignment[p] = subset;
    trace.assignment_log.emplace_back(p, subset);
  }

  result.feasible = true;
  result.partition = std::move(partition);
  return result;
}

MinRadiusResult min_radius_greedy(const Instance& inst, int m, int threads) {
  auto candidates = inst.candidate_radii();
  std::function<std::optional<Partition>(double)> eval =
      [&](double r) -> std::optional<Partition> {
    auto res = greedy_sc(inst, m, r);
    if (!res.feasible) return std::nullopt;
    return std::move(res.partition);
  };
  auto [index, partition] =
      detail::scan_candidates<Partition>(candidates, threads, eval);
  if (index >= candidates.size())
    throw std::logic_error("min_radius_greedy: no feasible candidate (unreachable)");
  MinRadiusResult out;
  out.radius = candidates[index];
  out.partition = std::move(partition);
  out.candidates_scanned = static_cast<int>(index) + 1;
  return out;
}

}  // namespace scp
