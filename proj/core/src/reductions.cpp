#include "scp/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace scp {

namespace {

using GridPoint = PlanarOrthogonalGraph::GridPoint;

bool unit_step(const GridPoint& a, const GridPoint& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

}  // namespace

PlanarOrthogonalGraph PlanarOrthogonalGraph::create(
    std::vector<GridPoint> vertices, std::vector<std::vector<GridPoint>> paths) {
  PlanarOrthogonalGraph g;
  g.vertices = std::move(vertices);
  g.edge_paths = std::move(paths);

  std::map<GridPoint, int> vertex_at;
  for (int i = 0; i < g.vertex_count(); ++i) {
    auto [it, inserted] = vertex_at.emplace(g.vertices[i], i);
    if (!inserted)
      throw std::invalid_argument("planar-orthogonal: duplicate vertex coordinates");
  }

  std::set<GridPoint> interior_points;
  std::set<std::pair<int, int>> seen_pairs;
  std::vector<int> degree(g.vertex_count(), 0);
  for (auto& path : g.edge_paths) {
    if (path.size() < 2)
      throw std::invalid_argument("planar-orthogonal: edge path too short");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!unit_step(path[i], path[i + 1]))
        throw std::invalid_argument("planar-orthogonal: edge path is not unit-step");
    auto u_it = vertex_at.find(path.front());
    auto v_it = vertex_at.find(path.back());
    if (u_it == vertex_at.end() || v_it == vertex_at.end())
      throw std::invalid_argument("planar-orthogonal: edge endpoint is not a vertex");
    int u = u_it->second, v = v_it->second;
    if (u == v) throw std::invalid_argument("planar-orthogonal: self-loop edge");
    // Canonical direction: from the smaller endpoint in lexicographic
    // coordinate order.
    if (g.vertices[v] < g.vertices[u]) {
      std::reverse(path.begin(), path.end());
      std::swap(u, v);
    }
    if (!seen_pairs.emplace(u, v).second)
      throw std::invalid_argument("planar-orthogonal: parallel edges");
    ++degree[u];
    ++degree[v];
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (vertex_at.count(path[i]))
        throw std::invalid_argument(
            "planar-orthogonal: edge path passes through a vertex");
      if (!interior_points.insert(path[i]).second)
        throw std::invalid_argument(
            "planar-orthogonal: edges share a non-endpoint grid point");
    }
  }
  for (int d : degree)
    if (d > 4) throw std::invalid_argument("planar-orthogonal: degree exceeds 4");
  return g;
}

int PlanarOrthogonalGraph::degree(int v) const {
  int d = 0;
  for (const auto& path : edge_paths) {
    if (path.front() == vertices[v]) ++d;
    if (path.back() == vertices[v]) ++d;
  }
  return d;
}

int PlanarOrthogonalGraph::vertex_at(const GridPoint& p) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices[i] == p) return i;
  return -1;
}

std::vector<std::pair<int, int>> PlanarOrthogonalGraph::edge_endpoints() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_paths.size());
  for (const auto& path : edge_paths)
    out.emplace_back(vertex_at(path.front()), vertex_at(path.back()));
  return out;
}

Instance graph_to_hop_metric(const HopGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("graph_to_hop_metric: graph must be connected");
  auto hops = g.hop_distances();
  std::vector<std::vector<double>> dist(g.n, std::vector<double>(g.n, 0.0));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) dist[i][j] = static_cast<double>(hops[i][j]);
  return Instance::from_matrix(std::move(dist));
}

HopGraph unit_ball_graph(const Instance& inst, double r) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < inst.size(); ++i)
    for (int j = i + 1; j < inst.size(); ++j)
      if (inst.within(inst.distance(i, j), r)) edges.emplace_back(i, j);
  return HopGraph(inst.size(), std::move(edges));
}

namespace {

struct GadgetBuilder {
  std::vector<Point2D> points;
  std::vector<PointRole> roles;
  std::map<std::pair<long long, long long>, int> index_of;  // coords * 2

  int add(double x, double y, PointRole role) {
    auto key = std::make_pair(static_cast<long long>(std::llround(2 * x)),
                              static_cast<long long>(std::llround(2 * y)));
    auto it = index_of.find(key);
    if (it != index_of.end())
      throw std::logic_error("gadget: coinciding points in construction");
    points.push_back({x, y});
    roles.push_back(role);
    index_of[key] = static_cast<int>(points.size()) - 1;
    return static_cast<int>(points.size()) - 1;
  }
};

// Rotation taking (1,0) to the given unit grid direction.
Point2D rotate_to(const GridPoint& dir, double x, double y) {
  if (dir.x == 1) return {x, y};
  if (dir.y == 1) return {-y, x};
  if (dir.x == -1) return {-x, -y};
  return {y, -x};
}

}  // namespace

GadgetOutput coloring_gadget(const PlanarOrthogonalGraph& g) {
  GadgetBuilder b;
  std::vector<int> vertex_index(g.vertex_count(), -1);
  std::vector<std::array<int, 2>> companions(g.vertex_count(), {-1, -1});
  std::vector<GadgetOutput::EdgeLayout> edge_layouts;

  auto endpoints = g.edge_endpoints();

  // Vertex points at 6x their drawn coordinates.
  for (int v = 0; v < g.vertex_count(); ++v) {
    double vx = 6.0 * g.vertices[v].x;
    double vy = 6.0 * g.vertices[v].y;
    vertex_index[v] = b.add(vx, vy, PointRole::kVertex);
  }

  // Companion pair for isolated and degree-1 vertices: the rightward
  // template {(-1,0), (-0.5,0.5)} rotated to point away from the single
  // incident edge.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 2) continue;
    GridPoint dir{1, 0};
    for (std::size_t e = 0; e < g.edge_paths.size(); ++e) {
      const auto& path = g.edge_paths[e];
      if (endpoints[e].first == v)
        dir = {path[1].x - path[0].x, path[1].y - path[0].y};
      else if (endpoints[e].second == v)
        dir = {path[path.size() - 2].x - path.back().x,
               path[path.size() - 2].y - path.back().y};
    }
    double vx = 6.0 * g.vertices[v].x;
    double vy = 6.0 * g.vertices[v].y;
    Point2D c1 = rotate_to(dir, -1.0, 0.0);
    Point2D c2 = rotate_to(dir, -0.5, 0.5);
    companions[v][0] =
        b.add(vx + c1.x, vy + c1.y, PointRole::kVertexCompanion);
    companions[v][1] =
        b.add(vx + c2.x, vy + c2.y, PointRole::kVertexCompanion);
  }

  for (std::size_t e = 0; e < g.edge_paths.size(); ++e) {
    const auto& drawn = g.edge_paths[e];
    // Scaled path: each drawn unit step becomes 6 grid steps.
    std::vector<GridPoint> path;
    for (std::size_t i = 0; i + 1 < drawn.size(); ++i) {
      GridPoint a{6 * drawn[i].x, 6 * drawn[i].y};
      GridPoint step{drawn[i + 1].x - drawn[i].x, drawn[i + 1].y - drawn[i].y};
      for (int s = 0; s < 6; ++s)
        path.push_back({a.x + s * step.x, a.y + s * step.y});
    }
    path.push_back({6 * drawn.back().x, 6 * drawn.back().y});
    const int k = static_cast<int>(path.size());

    GadgetOutput::EdgeLayout layout;
    layout.u = endpoints[e].first;
    layout.v = endpoints[e].second;
    layout.k = k;
    layout.path_point.assign(k, -1);
    layout.path_point[0] = vertex_index[layout.u];
    layout.path_point[k - 1] = vertex_index[layout.v];
    for (int i = 1; i < k - 1; ++i) {
      if (i == 3) continue;  // e_4 is replaced by the anchor triple
      layout.path_point[i] =
          b.add(path[i].x, path[i].y, PointRole::kPath);
    }

    // Anchor triple around e_4 (index 3). The scaling puts e_4 three steps
    // into the first straight segment, so it is never a corner.
    const GridPoint e4 = path[3];
    const GridPoint t{path[3].x - path[2].x, path[3].y - path[2].y};
    const GridPoint nrm{-t.y, t.x};
    layout.anchor_u = b.add(e4.x - 0.5 * t.x + 0.5 * nrm.x,
                            e4.y - 0.5 * t.y + 0.5 * nrm.y,
                            PointRole::kEdgeAnchorU);
    layout.anchor_v = b.add(e4.x + 0.5 * t.x + 0.5 * nrm.x,
                            e4.y + 0.5 * t.y + 0.5 * nrm.y,
                            PointRole::kEdgeAnchorV);
    layout.anchor_mid =
        b.add(e4.x + nrm.x, e4.y + nrm.y, PointRole::kEdgeAnchorMid);
    edge_layouts.push_back(std::move(layout));
  }

  return GadgetOutput{Instance::from_points(std::move(b.points)),
                      std::move(b.roles), std::move(vertex_index),
                      std::move(edge_layouts), std::move(companions)};
}

bool gadget_distance_dichotomy(const GadgetOutput& out) {
  const double sqrt2 = std::sqrt(2.0);
  for (int i = 0; i < out.points.size(); ++i) {
    for (int j = i + 1; j < out.points.size(); ++j) {
      double d = out.points.distance(i, j);
      if (d > 1.0 + kDistanceEps && d < sqrt2 - kDistanceEps) return false;
    }
  }
  return true;
}

bool gadget_path_neighbor_property(const GadgetOutput& out) {
  for (int i = 0; i < out.points.size(); ++i) {
    if (out.roles[i] != PointRole::kPath) continue;
    int neighbors = 0;
    for (int j = 0; j < out.points.size(); ++j) {
      if (j == i) continue;
      if (out.points.within(out.points.distance(i, j), 1.0)) ++neighbors;
    }
    if (neighbors != 2) return false;
  }
  return true;
}

namespace {

// Colors other than c, ascending.
std::array<int, 2> others(int c) {
  std::array<int, 2> out{};
  int idx = 0;
  for (int s = 0; s < 3; ++s)
    if (s != c) out[idx++] = s;
  return out;
}

// True when every listed point sees all 3 subsets within radius 1, counting
// only assigned points.
bool fully_covered(const Instance& pts, const std::vector<int>& assign,
                   const std::vector<int>& check) {
  for (int p : check) {
    bool seen[3] = {false, false, false};
    for (int q = 0; q < pts.size(); ++q) {
      if (assign[q] < 0) continue;
      if (pts.within(pts.distance(p, q), 1.0)) seen[assign[q]] = true;
    }
    if (!seen[0] || !seen[1] || !seen[2]) return false;
  }
  return true;
}

}  // namespace

Partition cover_from_coloring(const GadgetOutput& out,
                              const std::vector<int>& tau) {
  const int nv = static_cast<int>(out.vertex_index.size());
  if (static_cast<int>(tau.size()) != nv)
    throw std::invalid_argument("cover_from_coloring: coloring size mismatch");
  for (int c : tau)
    if (c < 0 || c > 2)
      throw std::invalid_argument("cover_from_coloring: colors must be in {0,1,2}");
  for (const auto& layout : out.edge_layouts)
    if (tau[layout.u] == tau[layout.v])
      throw std::invalid_argument("cover_from_coloring: improper coloring");

  const Instance& pts = out.points;
  std::vector<int> assign(pts.size(), -1);

  // Vertex points carry their color; companions take the two remaining
  // colors.
  for (int v = 0; v < nv; ++v) {
    assign[out.vertex_index[v]] = tau[v];
    if (out.companions[v][0] >= 0) {
      auto rest = others(tau[v]);
      assign[out.companions[v][0]] = rest[0];
      assign[out.companions[v][1]] = rest[1];
    }
  }

  // Degree >= 2 vertices: the first path points of the two lowest incident
  // edges take the remaining colors, making the vertex 3-1-covered.
  for (int v = 0; v < nv; ++v) {
    if (out.companions[v][0] >= 0) continue;
    auto rest = others(tau[v]);
    int used = 0;
    for (const auto& layout : out.edge_layouts) {
      if (used == 2) break;
      int adjacent = -1;
      if (layout.u == v)
        adjacent = layout.path_point[1];
      else if (layout.v == v)
        adjacent = layout.path_point[layout.k - 2];
      if (adjacent < 0) continue;
      assign[adjacent] = rest[used++];
    }
  }

  for (const auto& layout : out.edge_layouts) {
    // Anchors mirror the endpoint colors; the middle anchor takes the third.
    assign[layout.anchor_u] = tau[layout.u];
    assign[layout.anchor_v] = tau[layout.v];
    assign[layout.anchor_mid] = 3 - tau[layout.u] - tau[layout.v];

    // Interior schedule: period-3 repetition of (color of v, then the two
    // other colors ascending), phased from position 4.
    auto rest = others(tau[layout.v]);
    const int cycle[3] = {tau[layout.v], rest[0], rest[1]};
    for (int k1 = 5; k1 < layout.k - 3; ++k1) {  // 1-based positions
      int idx = k1 - 1;
      if (assign[layout.path_point[idx]] >= 0) continue;
      assign[layout.path_point[idx]] = cycle[(k1 - 4) % 3];
    }

    // Boundary points near both ends (including the (b)/(c) handoff index
    // k_uv - 3): exhaustive search, lexicographically smallest assignment
    // under which the whole edge structure is 3-1-covered.
    std::vector<int> open;
    std::vector<int> check = {layout.anchor_u, layout.anchor_v,
                              layout.anchor_mid};
    for (int k1 = 2; k1 <= layout.k - 1; ++k1) {
      int p = layout.path_point[k1 - 1];
      if (p < 0) continue;
      check.push_back(p);
      if (assign[p] < 0) open.push_back(p);
    }
    if (open.size() > 8)
      throw std::logic_error("cover_from_coloring: unexpected boundary size");
    long long combos = 1;
    for (std::size_t i = 0; i < open.size(); ++i) combos *= 3;
    bool done = false;
    for (long long code = 0; code < combos && !done; ++code) {
      long long rem = code;
      // Most significant digit first keeps the acceptance order
      // lexicographic over (open[0], open[1], ...).
      for (std::size_t i = open.size(); i-- > 0;) {
        assign[open[i]] = static_cast<int>(rem % 3);
        rem /= 3;
      }
      done = fully_covered(pts, assign, check);
    }
    if (!done)
      throw std::logic_error(
          "cover_from_coloring: no boundary assignment exists");
  }

  Partition p;
  p.m = 3;
  p.assignment = std::move(assign);
  if (!p.all_assigned() || !is_solidarity_cover(pts, p, 1.0))
    throw std::logic_error("cover_from_coloring: constructed cover is invalid");
  return p;
}

std::vector<int> coloring_from_cover(const GadgetOutput& out,
                                     const Partition& p, double r) {
  const double sqrt2 = std::sqrt(2.0);
  if (r < 1.0 - kDistanceEps || r >= sqrt2 - kDistanceEps)
    throw std::invalid_argument("coloring_from_cover: radius must be in [1, sqrt(2))");
  if (p.m != 3 || !is_solidarity_cover(out.points, p, r))
    throw std::invalid_argument(
        "coloring_from_cover: partition is not a 3-solidarity-r-cover");
  std::vector<int> tau(out.vertex_index.size());
  for (std::size_t v = 0; v < out.vertex_index.size(); ++v) {
    int s = p.assignment[out.vertex_index[v]];
    if (s == Partition::kUnassigned)
      throw std::invalid_argument("coloring_from_cover: vertex point unassigned");
    tau[v] = s;
  }
  return tau;
}

}  // namespace scp
