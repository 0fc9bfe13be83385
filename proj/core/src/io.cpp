#include "scp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace scp::io {

using nlohmann::json;

namespace {

// Canonical coordinate precision: 12 significant decimal digits.
double canonical(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

json number(double x) { return json(canonical(x)); }

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("document is not valid JSON");
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  return doc;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("missing or non-string \"kind\" field");
  const std::string kind = doc["kind"];
  try {
    if (kind == "points2d") {
      if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError("points2d: missing \"points\" array");
      std::vector<Point2D> pts;
      for (const auto& entry : doc["points"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
          throw ParseError("points2d: each point must be a [x, y] number pair");
        pts.push_back({entry[0].get<double>(), entry[1].get<double>()});
      }
      return {Instance::from_points(std::move(pts))};
    }
    if (kind == "matrix") {
      if (!doc.contains("dist") || !doc["dist"].is_array())
        throw ParseError("matrix: missing \"dist\" array");
      std::vector<std::vector<double>> dist;
      for (const auto& row : doc["dist"]) {
        if (!row.is_array()) throw ParseError("matrix: rows must be arrays");
        std::vector<double> r;
        for (const auto& cell : row) {
          if (!cell.is_number()) throw ParseError("matrix: entries must be numbers");
          r.push_back(cell.get<double>());
        }
        dist.push_back(std::move(r));
      }
      return {Instance::from_matrix(std::move(dist))};
    }
    if (kind == "graph") {
      if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("graph: missing integer \"n\" field");
      if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("graph: missing \"edges\" array");
      std::vector<std::pair<int, int>> edges;
      for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer())
          throw ParseError("graph: each edge must be an [i, j] index pair");
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
      }
      return {Instance::from_graph(HopGraph(doc["n"].get<int>(), std::move(edges)))};
    }
    if (kind == "planar-orthogonal") {
      if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("planar-orthogonal: missing \"vertices\" array");
      if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError("planar-orthogonal: missing \"edges\" array");
      std::vector<PlanarOrthogonalGraph::GridPoint> vertices;
      for (const auto& entry : doc["vertices"]) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer())
          throw ParseError(
              "planar-orthogonal: vertices must be integer [x, y] pairs");
        vertices.push_back({entry[0].get<int>(), entry[1].get<int>()});
      }
      std::vector<std::vector<PlanarOrthogonalGraph::GridPoint>> paths;
      for (const auto& path : doc["edges"]) {
        if (!path.is_array())
          throw ParseError("planar-orthogonal: edges must be arrays of grid points");
        std::vector<PlanarOrthogonalGraph::GridPoint> p;
        for (const auto& entry : path) {
          if (!entry.is_array() || entry.size() != 2 ||
              !entry[0].is_number_integer() || !entry[1].is_number_integer())
            throw ParseError(
                "planar-orthogonal: path points must be integer [x, y] pairs");
          p.push_back({entry[0].get<int>(), entry[1].get<int>()});
        }
        paths.push_back(std::move(p));
      }
      return {PlanarOrthogonalGraph::create(std::move(vertices), std::move(paths))};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown \"kind\": " + kind);
}

std::string write_instance(const Instance& inst) {
  json doc;
  switch (inst.kind()) {
    case InstanceKind::kPoints2D: {
      doc["kind"] = "points2d";
      json pts = json::array();
      for (const auto& p : inst.points())
        pts.push_back(json::array({number(p.x), number(p.y)}));
      doc["points"] = std::move(pts);
      break;
    }
    case InstanceKind::kExplicitMetric: {
      doc["kind"] = "matrix";
      json rows = json::array();
      for (const auto& row : inst.matrix()) {
        json r = json::array();
        for (double d : row) r.push_back(number(d));
        rows.push_back(std::move(r));
      }
      doc["dist"] = std::move(rows);
      break;
    }
    case InstanceKind::kHopGraph: {
      doc["kind"] = "graph";
      doc["n"] = inst.graph().n;
      json edges = json::array();
      for (auto [a, b] : inst.graph().edges)
        edges.push_back(json::array({a, b}));
      doc["edges"] = std::move(edges);
      break;
    }
  }
  return doc.dump();
}

std::string write_instance(const PlanarOrthogonalGraph& g) {
  json doc;
  doc["kind"] = "planar-orthogonal";
  json vertices = json::array();
  for (const auto& v : g.vertices)
    vertices.push_back(json::array({v.x, v.y}));
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& path : g.edge_paths) {
    json p = json::array();
    for (const auto& gp : path) p.push_back(json::array({gp.x, gp.y}));
    edges.push_back(std::move(p));
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

PartitionFile parse_partition(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.contains("m") || !doc["m"].is_number_integer())
    throw ParseError("partition: missing integer \"m\" field");
  if (!doc.contains("assignment") || !doc["assignment"].is_array())
    throw ParseError("partition: missing \"assignment\" array");
  PartitionFile pf;
  pf.partition.m = doc["m"].get<int>();
  if (pf.partition.m < 1) throw ParseError("partition: m must be >= 1");
  for (const auto& entry : doc["assignment"]) {
    if (entry.is_null()) {
      pf.partition.assignment.push_back(Partition::kUnassigned);
    } else if (entry.is_number_integer()) {
      int s = entry.get<int>();
      if (s < 0 || s >= pf.partition.m)
        throw ParseError("partition: subset index out of range");
      pf.partition.assignment.push_back(s);
    } else {
      throw ParseError("partition: assignment entries must be integers or null");
    }
  }
  if (doc.contains("radius")) {
    if (!doc["radius"].is_number())
      throw ParseError("partition: \"radius\" must be a number");
    pf.radius = doc["radius"].get<double>();
  }
  if (doc.contains("verified")) {
    if (!doc["verified"].is_boolean())
      throw ParseError("partition: \"verified\" must be a boolean");
    pf.verified = doc["verified"].get<bool>();
  }
  return pf;
}

std::string write_partition(const PartitionFile& pf) {
  json doc;
  doc["m"] = pf.partition.m;
  json assignment = json::array();
  for (int s : pf.partition.assignment) {
    if (s == Partition::kUnassigned)
      assignment.push_back(nullptr);
    else
      assignment.push_back(s);
  }
  doc["assignment"] = std::move(assignment);
  doc["radius"] = number(pf.radius);
  doc["verified"] = pf.verified;
  return doc.dump();
}

Instance gen_random_points(int n, double box_side, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_points: n must be >= 1");
  if (box_side <= 0.0)
    throw std::invalid_argument("gen_random_points: box side must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, box_side);
  std::vector<Point2D> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    double x = coord(rng);
    double y = coord(rng);
    pts.push_back({canonical(x), canonical(y)});
  }
  return Instance::from_points(std::move(pts));
}

Instance gen_clustered(int k_clusters, int pts_per_cluster,
                       double cluster_radius, double separation,
                       std::uint64_t seed) {
  if (k_clusters < 1 || pts_per_cluster < 1)
    throw std::invalid_argument("gen_clustered: cluster counts must be >= 1");
  if (cluster_radius < 0.0)
    throw std::invalid_argument("gen_clustered: cluster radius must be >= 0");
  if (k_clusters > 1 && separation <= 2.0 * cluster_radius)
    throw std::invalid_argument(
        "gen_clustered: separation must exceed twice the cluster radius");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point2D> pts;
  for (int c = 0; c < k_clusters; ++c) {
    double cx = c * separation;
    for (int i = 0; i < pts_per_cluster; ++i) {
      // Uniform in the disc of radius cluster_radius around the center.
      double angle = 2.0 * M_PI * unit(rng);
      double radius = cluster_radius * std::sqrt(unit(rng));
      pts.push_back({canonical(cx + radius * std::cos(angle)),
                     canonical(radius * std::sin(angle))});
    }
  }
  return Instance::from_points(std::move(pts));
}

PlanarOrthogonalGraph gen_planar_orthogonal(int grid_width, int grid_height,
                                            double edge_prob,
                                            std::uint64_t seed) {
  if (grid_width < 1 || grid_height < 1)
    throw std::invalid_argument("gen_planar_orthogonal: grid must be nonempty");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PlanarOrthogonalGraph::GridPoint> vertices;
  for (int x = 0; x < grid_width; ++x)
    for (int y = 0; y < grid_height; ++y) vertices.push_back({x, y});
  // Unit-length axis-parallel edges only, so paths never overlap.
  std::vector<std::vector<PlanarOrthogonalGraph::GridPoint>> paths;
  for (int x = 0; x < grid_width; ++x) {
    for (int y = 0; y < grid_height; ++y) {
      if (x + 1 < grid_width && unit(rng) < edge_prob)
        paths.push_back({{x, y}, {x + 1, y}});
      if (y + 1 < grid_height && unit(rng) < edge_prob)
        paths.push_back({{x, y}, {x, y + 1}});
    }
  }
  return PlanarOrthogonalGraph::create(std::move(vertices), std::move(paths));
}

std::string render_svg(const Instance& pts, const Partition& p, double r) {
  if (pts.kind() != InstanceKind::kPoints2D)
    throw std::invalid_argument("render_svg: planar (points2d) instances only");
  if (!p.well_formed(pts.size()))
    throw std::invalid_argument("render_svg: partition does not match instance");

  static const char* kColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  const auto& points = pts.points();
  double minx = points[0].x, maxx = points[0].x;
  double miny = points[0].y, maxy = points[0].y;
  for (const auto& pt : points) {
    minx = std::min(minx, pt.x);
    maxx = std::max(maxx, pt.x);
    miny = std::min(miny, pt.y);
    maxy = std::max(maxy, pt.y);
  }
  double pad = std::max(1.0, r > 0 ? r : 0.0) + 0.5;
  double scale = 40.0;
  auto sx = [&](double x) { return (x - minx + pad) * scale; };
  auto sy = [&](double y) { return (maxy - y + pad) * scale; };
  double width = (maxx - minx + 2 * pad) * scale;
  double height = (maxy - miny + 2 * pad) * scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << canonical(width) << "\" height=\"" << canonical(height)
      << "\">\n";
  if (r >= 0.0) {
    for (const auto& pt : points) {
      svg << "  <circle class=\"radius\" cx=\"" << canonical(sx(pt.x))
          << "\" cy=\"" << canonical(sy(pt.y)) << "\" r=\""
          << canonical(r * scale)
          << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
  }
  const double ms = 5.0;  // marker size
  for (int i = 0; i < pts.size(); ++i) {
    int s = p.assignment[i];
    double cx = sx(points[i].x), cy = sy(points[i].y);
    if (s == Partition::kUnassigned) {
      svg << "  <circle class=\"unassigned\" cx=\"" << canonical(cx)
          << "\" cy=\"" << canonical(cy) << "\" r=\"" << ms
          << "\" fill=\"#999999\"/>\n";
      continue;
    }
    const char* color = kColors[s % 8];
    std::string cls = "subset-" + std::to_string(s);
    switch (s % 4) {
      case 0:
        svg << "  <circle class=\"" << cls << "\" cx=\"" << canonical(cx)
            << "\" cy=\"" << canonical(cy) << "\" r=\"" << ms << "\" fill=\""
            << color << "\"/>\n";
        break;
      case 1:
        svg << "  <rect class=\"" << cls << "\" x=\"" << canonical(cx - ms)
            << "\" y=\"" << canonical(cy - ms) << "\" width=\"" << 2 * ms
            << "\" height=\"" << 2 * ms << "\" fill=\"" << color << "\"/>\n";
        break;
      case 2:
        svg << "  <polygon class=\"" << cls << "\" points=\""
            << canonical(cx) << "," << canonical(cy - ms) << " "
            << canonical(cx - ms) << "," << canonical(cy + ms) << " "
            << canonical(cx + ms) << "," << canonical(cy + ms)
            << "\" fill=\"" << color << "\"/>\n";
        break;
      default:
        svg << "  <polygon class=\"" << cls << "\" points=\""
            << canonical(cx) << "," << canonical(cy - ms) << " "
            << canonical(cx + ms) << "," << canonical(cy) << " "
            << canonical(cx) << "," << canonical(cy + ms) << " "
            << canonical(cx - ms) << "," << canonical(cy)
            << "\" fill=\"" << color << "\"/>\n";
        break;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace scp::io
