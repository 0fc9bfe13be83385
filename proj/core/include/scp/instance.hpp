#pragma once

#include <vector>

#include "scp/geometry.hpp"
#include "scp/hop_graph.hpp"

namespace scp {

enum class InstanceKind { kPoints2D, kExplicitMetric, kHopGraph };

// A finite metric space in one of three encodings: planar points under the
// Euclidean distance, an explicit distance matrix, or a connected graph
// under the shortest-path hop metric.
class Instance {
 public:
  static Instance from_points(std::vector<Point2D> pts);
  // Validates symmetry, zero diagonal, strictly positive off-diagonal
  // entries and the triangle inequality; throws std::invalid_argument
  // naming the violated property.
  static Instance from_matrix(std::vector<std::vector<double>> dist);
  // Requires a connected graph with at least one vertex.
  static Instance from_graph(HopGraph g);

  InstanceKind kind() const { return kind_; }
  int size() const { return n_; }

  double distance(int i, int j) const;

  // d <= r, with the absolute eps slack for Euclidean instances only.
  bool within(double d, double r) const;

  // {u | d(u, center) <= r}, sorted ascending. Always contains center.
  std::vector<int> ball(int center, double r) const;

  // Sorted, deduplicated pairwise distances, including 0.
  std::vector<double> candidate_radii() const;

  const std::vector<Point2D>& points() const;
  const HopGraph& graph() const;
  const std::vector<std::vector<double>>& matrix() const;

 private:
  Instance() = default;
  void check_index(int i) const;

  InstanceKind kind_ = InstanceKind::kPoints2D;
  int n_ = 0;
  std::vector<Point2D> points_;
  std::vector<std::vector<double>> dist_;  // matrix entries, or graph APSP
  HopGraph graph_;
};

}  // namespace scp
