#include "pathline/domination.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace pathline {

namespace {

int farthest_vertex(const std::vector<int>& dist) {
  int best = 0;
  for (int v = 1; v < static_cast<int>(dist.size()); ++v) {
    if (dist[v] > dist[best]) best = v;
  }
  return best;
}

// Shortest x,y-path with the smallest-id parent rule: walk back from y,
// always stepping to the smallest-id neighbor one layer closer to x.
std::vector<int> shortest_path(const Graph& g, int x, int y,
                               const std::vector<int>& dist_from_x) {
  std::vector<int> path{y};
  int current = y;
  while (current != x) {
    int parent = -1;
    for (int w : g.neighbors(current)) {
      if (dist_from_x[w] == dist_from_x[current] - 1) {
        parent = w;
        break;  // neighbors are sorted, first hit is the smallest id
      }
    }
    path.push_back(parent);
    current = parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

int path_domination_radius(const Graph& g, std::span<const int> path) {
  auto dist = multi_source_distances(g, path);
  return *std::max_element(dist.begin(), dist.end());
}

void validate_dominating_path(const Graph& g, const DominatingPath& p) {
  if (p.vertices.empty()) {
    throw std::invalid_argument("dominating path is empty");
  }
  for (int v : p.vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("dominating path vertex out of range: " +
                                  std::to_string(v));
    }
  }
  for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) {
      throw std::invalid_argument("dominating path vertices " +
                                  std::to_string(p.vertices[i]) + " and " +
                                  std::to_string(p.vertices[i + 1]) +
                                  " are not adjacent");
    }
  }
  auto dist = bfs_distances(g, p.vertices.front());
  if (dist[p.vertices.back()] !=
      static_cast<int>(p.vertices.size()) - 1) {
    throw std::invalid_argument("sequence is not a shortest path between " +
                                std::to_string(p.vertices.front()) + " and " +
                                std::to_string(p.vertices.back()));
  }
  int radius = path_domination_radius(g, p.vertices);
  if (radius != p.radius) {
    throw std::invalid_argument("domination radius mismatch: stored " +
                                std::to_string(p.radius) + ", actual " +
                                std::to_string(radius));
  }
}

DominatingPath double_bfs_dominating_path(const Graph& g) {
  auto from_s = bfs_distances(g, 0);
  int x = farthest_vertex(from_s);
  auto from_x = bfs_distances(g, x);
  int y = farthest_vertex(from_x);
  DominatingPath result;
  result.vertices = shortest_path(g, x, y, from_x);
  result.radius = path_domination_radius(g, result.vertices);
  return result;
}

DominatingPath best_dominating_shortest_path(const Graph& g) {
  int n = g.vertex_count();
  DominatingPath best;
  int best_radius = std::numeric_limits<int>::max();
  for (int x = 0; x < n; ++x) {
    auto from_x = bfs_distances(g, x);
    for (int y = x + 1; y < n; ++y) {
      auto path = shortest_path(g, x, y, from_x);
      int radius = path_domination_radius(g, path);
      if (radius < best_radius) {
        best_radius = radius;
        best.vertices = std::move(path);
      }
    }
  }
  best.radius = best_radius;
  return best;
}

DominatingPair min_dominating_pair(const Graph& g) {
  int n = g.vertex_count();
  DistanceMatrix dist(g);

  // Finds the lexicographically smallest k-dominating pair, or (-1, -1).
  auto probe = [&](int k) -> std::pair<int, int> {
    // M[w][x] = component label of x in G minus D(w, k), -1 inside disk.
    std::vector<std::vector<int>> m(n);
    std::vector<char> blocked(n);
    for (int w = 0; w < n; ++w) {
      for (int v = 0; v < n; ++v) blocked[v] = dist(w, v) <= k;
      m[w] = component_labels(g, blocked);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        bool ok = true;
        for (int w = 0; w < n && ok; ++w) {
          if (dist(w, x) <= k || dist(w, y) <= k) continue;
          if (m[w][x] == m[w][y]) ok = false;
        }
        if (ok) return {x, y};
      }
    }
    return {-1, -1};
  };

  int lo = 0, hi = dist.radius();
  // A pair made of a central vertex and any neighbor always works at
  // k = radius(G), so hi is feasible.
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (probe(mid).first >= 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  auto [x, y] = probe(lo);
  return DominatingPair{x, y, lo};
}

std::vector<std::vector<int>> path_branch_sets(const Graph& g,
                                               std::span<const int> path) {
  int n = g.vertex_count();
  auto dist = multi_source_distances(g, path);
  std::vector<int> branch(n, -1);
  for (size_t i = 0; i < path.size(); ++i) {
    branch[path[i]] = static_cast<int>(i);
  }
  // Assign vertices level by level; the parent is the smallest-id
  // neighbor one level closer to the path.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dist[a] < dist[b]; });
  for (int v : order) {
    if (branch[v] >= 0) continue;
    for (int w : g.neighbors(v)) {
      if (dist[w] == dist[v] - 1) {
        branch[v] = branch[w];
        break;
      }
    }
  }
  std::vector<std::vector<int>> sets(path.size());
  for (int v = 0; v < n; ++v) sets[branch[v]].push_back(v);
  return sets;
}

}  // namespace pathline
