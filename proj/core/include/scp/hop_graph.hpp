#pragma once

#include <utility>
#include <vector>

namespace scp {

// Undirected simple graph on vertex indices [0, n). Edges are normalized
// (i < j), sorted and deduplicated on construction. Disconnected graphs are
// representable here; Instance::from_graph additionally requires
// connectivity so that hop distances form a metric.
struct HopGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  HopGraph() = default;
  // Throws std::invalid_argument on self-loops or out-of-range indices.
  HopGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  std::vector<std::vector<int>> adjacency() const;
  bool connected() const;
  // All-pairs hop distances (BFS); -1 marks unreachable pairs.
  std::vector<std::vector<int>> hop_distances() const;

  bool operator==(const HopGraph&) const = default;
};

}  // namespace scp
