#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathline {

/// Unweighted, undirected, connected simple graph with dense 0-based
/// vertex ids. Construction canonicalizes the edge list (duplicates
/// collapsed, neighbor lists sorted) and rejects invalid input:
/// n < 2, ids out of range, self-loops, or a disconnected graph.
/// Instances are immutable and safe to share across threads.
class Graph {
 public:
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  /// All edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Exact hop distances between all vertex pairs, computed by one BFS
/// per vertex at construction. Immutable.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int size() const { return n_; }
  int operator()(int u, int v) const { return dist_[u * n_ + v]; }

  int eccentricity(int v) const;
  int diameter() const;
  int radius() const;

 private:
  int n_;
  std::vector<int> dist_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  return DistanceMatrix(g);
}

/// BFS layering from a start vertex: layers[i] holds the vertices at
/// distance exactly i from start, each layer sorted by id.
struct Layering {
  int start = 0;
  std::vector<std::vector<int>> layers;

  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

Layering bfs_layering(const Graph& g, int start);

/// Hop distances from a single source.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Hop distances from the nearest of several sources.
std::vector<int> multi_source_distances(const Graph& g,
                                        std::span<const int> sources);

/// k-th power: edge uv present iff 1 <= d_G(u, v) <= k.
Graph graph_power(const Graph& g, int k);

/// Vertices at distance <= radius from center, sorted by id.
std::vector<int> disk(const Graph& g, int center, int radius);

/// True iff the disk D(center, radius) meets every u,w-path: u or w lies
/// inside the disk, or they fall into different components of G minus
/// the disk.
bool disk_intercepts(const Graph& g, int center, int radius, int u, int w);

/// Connected-component labels of the subgraph induced by the non-blocked
/// vertices. Blocked vertices get label -1; labels are assigned in order
/// of the smallest vertex id contained in each component.
std::vector<int> component_labels(const Graph& g,
                                  const std::vector<char>& blocked);

}  // namespace pathline
