#include "scp/hop_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace scp {

HopGraph::HopGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n(vertex_count) {
  if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
  for (auto& [a, b] : edge_list) {
    if (a == b) throw std::invalid_argument("graph: self-loop");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("graph: edge index out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                  edge_list.end());
  edges = std::move(edge_list);
}

std::vector<std::vector<int>> HopGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

bool HopGraph::connected() const {
  if (n == 0) return false;
  auto adj = adjacency();
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

std::vector<std::vector<int>> HopGraph::hop_distances() const {
  auto adj = adjacency();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

}  // namespace scp
