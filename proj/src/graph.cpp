#include "pathline/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pathline {

namespace {

std::vector<std::vector<int>> build_adjacency(
    int n, std::span<const std::pair<int, int>> edges) {
  if (n < 2) {
    throw std::invalid_argument("graph must have at least 2 vertices, got " +
                                std::to_string(n));
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges)
    : adj_(build_adjacency(n, edges)) {
  for (const auto& list : adj_) edge_count_ += static_cast<int>(list.size());
  edge_count_ /= 2;

  // Connectivity is a standing assumption for every algorithm here.
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw std::invalid_argument("graph is disconnected (" +
                                std::to_string(reached) + " of " +
                                std::to_string(n) + " vertices reachable)");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                    edges.size())) {}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> multi_source_distances(const Graph& g,
                                        std::span<const int> sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.vertex_count()), dist_(static_cast<size_t>(n_) * n_) {
  for (int v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<size_t>(v) * n_);
  }
}

int DistanceMatrix::eccentricity(int v) const {
  int ecc = 0;
  for (int u = 0; u < n_; ++u) ecc = std::max(ecc, (*this)(v, u));
  return ecc;
}

int DistanceMatrix::diameter() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
  return d;
}

int DistanceMatrix::radius() const {
  int r = eccentricity(0);
  for (int v = 1; v < n_; ++v) r = std::min(r, eccentricity(v));
  return r;
}

Layering bfs_layering(const Graph& g, int start) {
  auto dist = bfs_distances(g, start);
  int depth = *std::max_element(dist.begin(), dist.end());
  Layering layering;
  layering.start = start;
  layering.layers.assign(depth + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    layering.layers[dist[v]].push_back(v);
  }
  return layering;
}

Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("graph power requires k >= 1");
  DistanceMatrix dist(g);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (dist(u, v) <= k) edges.emplace_back(u, v);
    }
  }
  return Graph(g.vertex_count(), edges);
}

std::vector<int> disk(const Graph& g, int center, int radius) {
  auto dist = bfs_distances(g, center);
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] <= radius) result.push_back(v);
  }
  return result;
}

std::vector<int> component_labels(const Graph& g,
                                  const std::vector<char>& blocked) {
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (blocked[s] || label[s] >= 0) continue;
    label[s] = next;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (!blocked[w] && label[w] < 0) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool disk_intercepts(const Graph& g, int center, int radius, int u, int w) {
  auto from_center = bfs_distances(g, center);
  if (from_center[u] <= radius || from_center[w] <= radius) return true;
  std::vector<char> blocked(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (from_center[v] <= radius) blocked[v] = 1;
  }
  auto label = component_labels(g, blocked);
  return label[u] != label[w];
}

}  // namespace pathline
