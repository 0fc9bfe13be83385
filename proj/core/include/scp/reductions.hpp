#pragma once

#include <array>
#include <compare>
#include <utility>
#include <vector>

#include "scp/cover.hpp"
#include "scp/instance.hpp"

namespace scp {

// Graph drawn on the integer grid with axis-parallel edge paths. Each edge
// path is a sequence of unit-step grid points running between two vertices.
// Paths are canonicalized to run from the smaller endpoint to the larger
// under lexicographic coordinate order.
struct PlanarOrthogonalGraph {
  struct GridPoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const GridPoint&) const = default;
  };

  std::vector<GridPoint> vertices;
  std::vector<std::vector<GridPoint>> edge_paths;

  // Validates: distinct vertices, unit steps, endpoints at vertices, max
  // degree 4, no shared non-endpoint grid points, no vertex interior to a
  // path, no parallel edges or self loops. Throws std::invalid_argument.
  static PlanarOrthogonalGraph create(std::vector<GridPoint> vertices,
                                      std::vector<std::vector<GridPoint>> paths);

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int degree(int v) const;
  int vertex_at(const GridPoint& p) const;  // -1 when no vertex there
  // Per edge path, (u, v) vertex indices with u < v in vertex order.
  std::vector<std::pair<int, int>> edge_endpoints() const;
};

enum class PointRole {
  kVertex,
  kVertexCompanion,
  kEdgeAnchorU,
  kEdgeAnchorV,
  kEdgeAnchorMid,
  kPath,
};

// Point set produced by the 3-coloring hardness construction, plus the
// bookkeeping needed to map colorings to covers and back.
struct GadgetOutput {
  Instance points;  // planar instance
  std::vector<PointRole> roles;
  std::vector<int> vertex_index;  // graph vertex -> point index

  struct EdgeLayout {
    int u = 0;
    int v = 0;
    int k = 0;  // number of grid points on the scaled path
    // Point index per path position (0-based); [0] and [k-1] are the
    // endpoint vertex points, [3] is -1 (replaced by the anchor triple).
    std::vector<int> path_point;
    int anchor_u = -1;
    int anchor_v = -1;
    int anchor_mid = -1;
  };
  std::vector<EdgeLayout> edge_layouts;
  // Per vertex: companion point indices, or {-1, -1} when degree >= 2.
  std::vector<std::array<int, 2>> companions;
};

// d(i,j) = shortest-path hop count, as an explicit matrix instance.
// Rejects disconnected graphs.
Instance graph_to_hop_metric(const HopGraph& g);

// Edge {i,j} iff distance(i,j) <= r. The result may be disconnected.
HopGraph unit_ball_graph(const Instance& inst, double r);

// Scales the drawing by 6 and emits the point set whose 3-solidarity-r-cover
// existence (for 1 <= r < sqrt(2)) is equivalent to 3-colorability.
GadgetOutput coloring_gadget(const PlanarOrthogonalGraph& g);

// Structural invariants of a gadget point set; exposed for tests.
bool gadget_distance_dichotomy(const GadgetOutput& out);
bool gadget_path_neighbor_property(const GadgetOutput& out);

// Builds a 3-solidarity-1-cover from a proper 3-coloring of the source
// graph. Throws std::invalid_argument on an improper coloring and
// std::logic_error if a boundary assignment cannot be completed.
Partition cover_from_coloring(const GadgetOutput& out,
                              const std::vector<int>& tau);

// Reads each vertex point's subset as its color. Requires p to be a
// 3-solidarity-r-cover with 1 <= r < sqrt(2); the result is a proper
// 3-coloring. Throws std::invalid_argument on unassigned vertex points.
std::vector<int> coloring_from_cover(const GadgetOutput& out,
                                     const Partition& p, double r);

}  // namespace scp
