#include "pathline/distortion.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pathline {

int embedding_distortion(const Graph& g, std::span<const int> positions) {
  int n = g.vertex_count();
  if (static_cast<int>(positions.size()) != n) {
    throw std::invalid_argument("positions size does not match graph");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return positions[a] < positions[b]; });
  for (int i = 0; i + 1 < n; ++i) {
    if (positions[order[i]] == positions[order[i + 1]]) {
      throw std::invalid_argument("embedding is not injective at vertices " +
                                  std::to_string(order[i]) + " and " +
                                  std::to_string(order[i + 1]));
    }
  }
  // Non-contractiveness on consecutive pairs implies it for all pairs.
  auto dist = all_pairs_distances(g);
  for (int i = 0; i + 1 < n; ++i) {
    int a = order[i], b = order[i + 1];
    if (positions[b] - positions[a] < dist(a, b)) {
      throw std::invalid_argument(
          "embedding is contractive on consecutive pair (" +
          std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  int distortion = 0;
  for (const auto& [u, v] : g.edges()) {
    distortion = std::max(distortion, std::abs(positions[u] - positions[v]));
  }
  return distortion;
}

LineEmbedding make_embedding(const Graph& g, std::vector<int> positions) {
  int distortion = embedding_distortion(g, positions);
  int lo = *std::min_element(positions.begin(), positions.end());
  for (int& p : positions) p -= lo;
  return LineEmbedding{std::move(positions), distortion};
}

LineEmbedding canonic_embedding(const Graph& g, std::span<const int> order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order size does not match graph");
  }
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("order is not a permutation of the vertices");
    }
    seen[v] = 1;
  }
  auto dist = all_pairs_distances(g);
  std::vector<int> positions(n, 0);
  for (int i = 1; i < n; ++i) {
    positions[order[i]] = positions[order[i - 1]] + dist(order[i - 1], order[i]);
  }
  return make_embedding(g, std::move(positions));
}

std::vector<std::pair<int, int>> embed_connected_set(
    const Graph& g, std::span<const int> set) {
  if (set.empty()) throw std::invalid_argument("cannot embed an empty set");
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : set) in_set[v] = 1;

  // DFS preorder from the smallest-id member, smallest-id neighbor first.
  // The preorder keeps the total span within 2|S| - 2: consecutive
  // visits are joined by DFS-tree walks that traverse each tree edge at
  // most twice overall.
  int start = *std::min_element(set.begin(), set.end());
  std::vector<int> visit_order;
  std::vector<char> visited(g.vertex_count(), 0);
  // Explicit (vertex, next-neighbor-index) stack emulating the recursion.
  std::vector<std::pair<int, size_t>> stack{{start, 0}};
  visited[start] = 1;
  visit_order.push_back(start);
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    const auto& nbrs = g.neighbors(v);
    bool descended = false;
    while (idx < nbrs.size()) {
      int w = nbrs[idx++];
      if (in_set[w] && !visited[w]) {
        visited[w] = 1;
        visit_order.push_back(w);
        stack.emplace_back(w, 0);
        descended = true;
        break;
      }
    }
    if (!descended) stack.pop_back();
  }
  if (visit_order.size() != set.size()) {
    throw std::invalid_argument("set does not induce a connected subgraph");
  }

  std::vector<std::pair<int, int>> placed;
  placed.reserve(set.size());
  int position = 0;
  int previous = -1;
  for (int v : visit_order) {
    if (previous >= 0) {
      auto dist = bfs_distances(g, previous);
      position += dist[v];
    }
    placed.emplace_back(v, position);
    previous = v;
  }
  return placed;
}

LineEmbedding embedding_from_dominating_path(const Graph& g,
                                             const DominatingPath& path) {
  validate_dominating_path(g, path);
  auto branches = path_branch_sets(g, path.vertices);
  int gap = 2 * path.radius + 1;
  std::vector<int> positions(g.vertex_count(), 0);
  int offset = 0;
  bool first_block = true;
  for (const auto& branch : branches) {
    auto placed = embed_connected_set(g, branch);
    if (!first_block) offset += gap;
    for (const auto& [v, p] : placed) positions[v] = offset + p;
    offset += placed.back().second;
    first_block = false;
  }
  return make_embedding(g, std::move(positions));
}

}  // namespace pathline
