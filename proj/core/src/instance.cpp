#include "scp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scp {

Instance Instance::from_points(std::vector<Point2D> pts) {
  if (pts.empty()) throw std::invalid_argument("points2d: need n >= 1");
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("points2d: non-finite coordinate");
  }
  Instance inst;
  inst.kind_ = InstanceKind::kPoints2D;
  inst.n_ = static_cast<int>(pts.size());
  inst.points_ = std::move(pts);
  return inst;
}

Instance Instance::from_matrix(std::vector<std::vector<double>> dist) {
  const int n = static_cast<int>(dist.size());
  if (n < 1) throw std::invalid_argument("matrix: need n >= 1");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n)
      throw std::invalid_argument("matrix: not square");
    for (int j = 0; j < n; ++j) {
      double d = dist[i][j];
      if (!std::isfinite(d) || d < 0.0)
        throw std::invalid_argument("matrix: entries must be finite and nonnegative");
      if (i == j && d != 0.0)
        throw std::invalid_argument("matrix: nonzero diagonal");
      if (i != j && d <= 0.0)
        throw std::invalid_argument("matrix: off-diagonal entries must be positive");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] != dist[j][i])
        throw std::invalid_argument("matrix: asymmetric");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (dist[i][k] > dist[i][j] + dist[j][k] + kDistanceEps)
          throw std::invalid_argument("matrix: triangle inequality violated");
  Instance inst;
  inst.kind_ = InstanceKind::kExplicitMetric;
  inst.n_ = n;
  inst.dist_ = std::move(dist);
  return inst;
}

Instance Instance::from_graph(HopGraph g) {
  if (!g.connected())
    throw std::invalid_argument("graph: disconnected graphs are not a metric instance");
  auto hops = g.hop_distances();
  Instance inst;
  inst.kind_ = InstanceKind::kHopGraph;
  inst.n_ = g.n;
  inst.dist_.assign(g.n, std::vector<double>(g.n, 0.0));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      inst.dist_[i][j] = static_cast<double>(hops[i][j]);
  inst.graph_ = std::move(g);
  return inst;
}

void Instance::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("point index out of range");
}

double Instance::distance(int i, int j) const {
  check_index(i);
  check_index(j);
  if (kind_ == InstanceKind::kPoints2D) return euclidean(points_[i], points_[j]);
  return dist_[i][j];
}

bool Instance::within(double d, double r) const {
  if (kind_ == InstanceKind::kPoints2D) return d <= r + kDistanceEps;
  return d <= r;
}

std::vector<int> Instance::ball(int center, double r) const {
  check_index(center);
  std::vector<int> members;
  for (int u = 0; u < n_; ++u)
    if (within(distance(center, u), r)) members.push_back(u);
  return members;
}

std::vector<double> Instance::candidate_radii() const {
  std::vector<double> radii;
  radii.push_back(0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) radii.push_back(distance(i, j));
  std::sort(radii.begin(), radii.end());
  std::vector<double> out;
  for (double r : radii) {
    if (out.empty() || r - out.back() > kDistanceEps) out.push_back(r);
  }
  return out;
}

const std::vector<Point2D>& Instance::points() const {
  if (kind_ != InstanceKind::kPoints2D)
    throw std::logic_error("instance is not points2d");
  return points_;
}

const HopGraph& Instance::graph() const {
  if (kind_ != InstanceKind::kHopGraph)
    throw std::logic_error("instance is not a graph");
  return graph_;
}

const std::vector<std::vector<double>>& Instance::matrix() const {
  if (kind_ == InstanceKind::kPoints2D)
    throw std::logic_error("instance has no explicit matrix");
  return dist_;
}

}  // namespace scp
