#include "scp/squares.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "candidate_scan.hpp"

namespace scp {

namespace {

constexpr double kTwoSqrtTwo = 2.8284271247461903;  // 2 * sqrt(2)

// (ceil(q) + 1)^2 with near-integer q snapped before rounding.
int bound_from_ratio(double q) {
  double rounded = std::round(q);
  double c = (std::abs(q - rounded) <= kDistanceEps) ? rounded : std::ceil(q);
  int per_dim = static_cast<int>(c) + 1;
  return per_dim * per_dim;
}

}  // namespace

int max_square_intersections(double r, double r_prime) {
  if (r <= 0.0 || r_prime <= 0.0)
    throw std::invalid_argument("max_square_intersections: radii must be positive");
  return bound_from_ratio(kTwoSqrtTwo * r / r_prime);
}

int reduced_partition_size(int m, double beta) {
  if (beta <= 1.0)
    throw std::invalid_argument("reduced_partition_size: beta must exceed 1");
  if (m < 1) throw std::invalid_argument("reduced_partition_size: m must be >= 1");
  // f(r, (beta-1) r) depends only on the ratio, so it is valid at r = 0 too.
  int f = bound_from_ratio(kTwoSqrtTwo / (beta - 1.0));
  return m / f;
}

int count_disc_cell_intersections(const Point2D& center, double r, double s) {
  if (r <= 0.0 || s <= 0.0)
    throw std::invalid_argument("count_disc_cell_intersections: positive r, s required");
  int col_lo = static_cast<int>(std::floor((center.x - r) / s)) - 1;
  int col_hi = static_cast<int>(std::floor((center.x + r) / s)) + 1;
  int row_lo = static_cast<int>(std::floor((center.y - r) / s)) - 1;
  int row_hi = static_cast<int>(std::floor((center.y + r) / s)) + 1;
  int count = 0;
  for (int i = col_lo; i <= col_hi; ++i) {
    for (int j = row_lo; j <= row_hi; ++j) {
      double nx = std::clamp(center.x, i * s, (i + 1) * s);
      double ny = std::clamp(center.y, j * s, (j + 1) * s);
      if (std::hypot(nx - center.x, ny - center.y) <= r + kDistanceEps) ++count;
    }
  }
  return count;
}

std::pair<int, int> SquareGrid::cell_of(const Point2D& p) const {
  int col = static_cast<int>(std::floor((p.x - origin.x) / cell_side));
  int row = static_cast<int>(std::floor((p.y - origin.y) / cell_side));
  // Closing the final column/row keeps the extreme points inside the grid.
  col = std::clamp(col, 0, columns - 1);
  row = std::clamp(row, 0, rows - 1);
  return {col, row};
}

SquareGrid make_grid(const std::vector<Point2D>& pts, double cell_diameter) {
  if (pts.empty()) throw std::invalid_argument("make_grid: empty point set");
  if (cell_diameter <= 0.0)
    throw std::invalid_argument("make_grid: cell diameter must be positive");
  double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const auto& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  SquareGrid grid;
  grid.origin = {minx, miny};
  grid.cell_side = cell_diameter / std::sqrt(2.0);
  grid.columns = std::max(1, static_cast<int>(std::ceil((maxx - minx) / grid.cell_side)));
  grid.rows = std::max(1, static_cast<int>(std::ceil((maxy - miny) / grid.cell_side)));
  return grid;
}

SquaresResult squares_sc(const Instance& pts, int m, double beta, double r) {
  if (pts.kind() != InstanceKind::kPoints2D)
    throw std::invalid_argument("squares_sc: planar (points2d) instances only");
  if (beta <= 1.0) throw std::invalid_argument("squares_sc: beta must exceed 1");
  if (m < 1) throw std::invalid_argument("squares_sc: m must be >= 1");
  if (r < 0.0) throw std::invalid_argument("squares_sc: radius must be nonnegative");
  const int m_prime = reduced_partition_size(m, beta);
  if (m_prime < 1)
    throw std::invalid_argument(
        "squares_sc: reduced partition size is zero; the scheme cannot apply");

  const auto& points = pts.points();
  const int n = pts.size();

  // Bucket points by cell. At r = 0 the grid degenerates; each distinct
  // coordinate then acts as its own cell.
  std::map<std::pair<long long, long long>, std::vector<int>> cells;
  if (r > 0.0) {
    SquareGrid grid = make_grid(points, (beta - 1.0) * r);
    for (int i = 0; i < n; ++i) {
      auto [col, row] = grid.cell_of(points[i]);
      cells[{col, row}].push_back(i);
    }
  } else {
    std::map<std::pair<double, double>, int> coord_ids;
    for (int i = 0; i < n; ++i) {
      auto [it, inserted] = coord_ids.try_emplace(
          std::make_pair(points[i].x, points[i].y),
          static_cast<int>(coord_ids.size()));
      cells[{it->second, 0}].push_back(i);
    }
  }

  Partition partition;
  partition.m = m_prime;
  partition.assignment.assign(n, Partition::kUnassigned);
  for (const auto& [key, members] : cells) {
    // Members are in ascending index order; j mod m' guarantees every subset
    // a representative whenever the cell holds at least m' points.
    for (std::size_t j = 0; j < members.size(); ++j)
      partition.assignment[members[j]] = static_cast<int>(j) % m_prime;
  }

  SquaresResult result;
  if (!is_solidarity_cover(pts, partition, beta * r)) {
    result.feasible = false;
    return result;
  }
  result.feasible = true;
  result.partition = std::move(partition);
  return result;
}

MinRadiusResult min_radius_bicriteria(const Instance& pts, int m, double beta,
                                      int threads) {
  if (reduced_partition_size(m, beta) < 1)
    throw std::invalid_argument(
        "min_radius_bicriteria: reduced partition size is zero");
  auto candidates = pts.candidate_radii();
  std::function<std::optional<Partition>(double)> eval =
      [&](double r) -> std::optional<Partition> {
    auto res = squares_sc(pts, m, beta, r);
    if (!res.feasible) return std::nullopt;
    return std::move(res.partition);
  };
  auto [index, partition] =
      detail::scan_candidates<Partition>(candidates, threads, eval);
  if (index >= candidates.size())
    throw NoFeasibleRadius(
        "min_radius_bicriteria: no candidate radius is feasible");
  MinRadiusResult out;
  out.radius = candidates[index];
  out.partition = std::move(partition);
  out.candidates_scanned = static_cast<int>(index) + 1;
  return out;
}

}  // namespace scp
