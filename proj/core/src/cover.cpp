#include "scp/cover.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace scp {

bool Partition::well_formed(int n) const {
  if (m < 1) return false;
  if (static_cast<int>(assignment.size()) != n) return false;
  for (int s : assignment)
    if (s != kUnassigned && (s < 0 || s >= m)) return false;
  return true;
}

bool Partition::all_assigned() const {
  return std::none_of(assignment.begin(), assignment.end(),
                      [](int s) { return s == kUnassigned; });
}

std::vector<std::vector<int>> subsets_of(const Partition& p) {
  std::vector<std::vector<int>> subsets(p.m);
  for (int i = 0; i < static_cast<int>(p.assignment.size()); ++i)
    if (p.assignment[i] != Partition::kUnassigned)
      subsets[p.assignment[i]].push_back(i);
  return subsets;
}

bool is_r_cover(const Instance& inst, const std::vector<int>& subset, double r) {
  for (int p = 0; p < inst.size(); ++p) {
    bool covered = false;
    for (int s : subset) {
      if (inst.within(inst.distance(p, s), r)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_solidarity_cover(const Instance& inst, const Partition& p, double r) {
  if (!p.well_formed(inst.size()))
    throw std::invalid_argument("partition does not match instance");
  for (const auto& subset : subsets_of(p))
    if (!is_r_cover(inst, subset, r)) return false;
  return true;
}

int coverage_count(const Instance& inst, const Partition& p, double r, int pt) {
  if (!p.well_formed(inst.size()))
    throw std::invalid_argument("partition does not match instance");
  if (pt < 0 || pt >= inst.size())
    throw std::out_of_range("point index out of range");
  int count = 0;
  for (const auto& subset : subsets_of(p)) {
    for (int s : subset) {
      if (inst.within(inst.distance(pt, s), r)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

double cover_radius(const Instance& inst, const Partition& p) {
  if (!p.well_formed(inst.size()))
    throw std::invalid_argument("partition does not match instance");
  auto subsets = subsets_of(p);
  for (const auto& subset : subsets)
    if (subset.empty())
      throw std::invalid_argument("cover_radius: empty subset has no finite radius");
  double radius = 0.0;
  for (int pt = 0; pt < inst.size(); ++pt) {
    for (const auto& subset : subsets) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int s : subset) nearest = std::min(nearest, inst.distance(pt, s));
      radius = std::max(radius, nearest);
    }
  }
  return radius;
}

}  // namespace scp
