#include "pathline/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace pathline::oracle {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw std::invalid_argument(std::string(what) + ": graph has " +
                                std::to_string(g.vertex_count()) +
                                " vertices, cap is " + std::to_string(cap));
  }
}

// Hard bound of the ordering-enumeration oracles; factorial growth makes
// anything larger pointless and the bitmask tables assume it.
constexpr int kEnumerationLimit = 12;

void check_enumeration_size(const Graph& g, int cap, const char* what) {
  check_cap(g, cap, what);
  if (g.vertex_count() > kEnumerationLimit) {
    throw std::invalid_argument(
        std::string(what) + ": ordering enumeration is infeasible beyond " +
        std::to_string(kEnumerationLimit) + " vertices");
  }
}

// Leftmost position of an original-graph neighbor placed before each
// position, or the position itself when there is none. The interval
// closure connects position c to exactly the positions in
// [left_reach[c], c).
void left_reaches(const Graph& g, std::span<const int> order,
                  std::span<const int> position, std::vector<int>& out) {
  int n = g.vertex_count();
  out.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    int reach = c;
    for (int w : g.neighbors(order[c])) {
      if (position[w] < c) reach = std::min(reach, position[w]);
    }
    out[c] = reach;
  }
}

}  // namespace

int exact_bandwidth(const Graph& g, int cap) {
  return pathline::exact_bandwidth(g, cap);
}

int exact_bandwidth_enumeration(const Graph& g, int cap) {
  check_cap(g, cap, "bandwidth enumeration");
  int n = g.vertex_count();
  auto edges = g.edges();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(n);
  int best = n - 1;
  do {
    if (order[0] > order[n - 1]) continue;  // reversal symmetry
    for (int p = 0; p < n; ++p) position[order[p]] = p;
    int bandwidth = 0;
    for (const auto& [u, v] : edges) {
      bandwidth = std::max(bandwidth, std::abs(position[u] - position[v]));
      if (bandwidth >= best) break;
    }
    best = std::min(best, bandwidth);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

// Shared search for the distortion oracle; returns the best value and
// the lexicographically first optimal ordering.
std::pair<int, std::vector<int>> best_canonic_order(const Graph& g) {
  int n = g.vertex_count();
  DistanceMatrix dist(g);
  auto edges = g.edges();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(n);
  int best = std::numeric_limits<int>::max();
  std::vector<int> best_order;
  do {
    if (order[0] > order[n - 1]) continue;  // mirrored embedding
    pos[order[0]] = 0;
    for (int i = 1; i < n; ++i) {
      pos[order[i]] = pos[order[i - 1]] + dist(order[i - 1], order[i]);
    }
    int stretch = 0;
    for (const auto& [u, v] : edges) {
      stretch = std::max(stretch, std::abs(pos[u] - pos[v]));
      if (stretch >= best) break;
    }
    if (stretch < best) {
      best = stretch;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {best, std::move(best_order)};
}

}  // namespace

int exact_line_distortion(const Graph& g, int cap) {
  check_cap(g, cap, "exact line-distortion");
  return best_canonic_order(g).first;
}

LineEmbedding optimal_canonic_embedding(const Graph& g, int cap) {
  check_cap(g, cap, "exact line-distortion");
  auto [value, order] = best_canonic_order(g);
  return canonic_embedding(g, order);
}

Graph interval_closure(const Graph& g, std::span<const int> order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order size does not match graph");
  }
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (v < 0 || v >= n || position[v] >= 0) {
      throw std::invalid_argument("order is not a permutation of the vertices");
    }
    position[v] = p;
  }
  std::vector<int> reach;
  left_reaches(g, order, position, reach);
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < n; ++c) {
    for (int b = reach[c]; b < c; ++b) edges.emplace_back(order[b], order[c]);
  }
  return Graph(n, edges);
}

int exact_path_length(const Graph& g, int cap) {
  check_enumeration_size(g, cap, "exact path-length");
  int n = g.vertex_count();
  DistanceMatrix dist(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(n), reach;
  int best = dist.diameter();
  do {
    for (int p = 0; p < n; ++p) position[order[p]] = p;
    left_reaches(g, order, position, reach);
    int length = 0;
    for (int c = 0; c < n && length < best; ++c) {
      for (int b = reach[c]; b < c; ++b) {
        length = std::max(length, dist(order[b], order[c]));
      }
    }
    best = std::min(best, length);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int exact_path_breadth(const Graph& g, int cap) {
  check_enumeration_size(g, cap, "exact path-breadth");
  int n = g.vertex_count();
  DistanceMatrix dist(g);

  // radius[mask]: smallest disk radius covering the vertex set `mask`.
  int masks = 1 << n;
  std::vector<int> radius(masks, 0);
  {
    std::vector<int> reach(static_cast<size_t>(n) * masks, 0);
    for (int w = 0; w < n; ++w) {
      for (int mask = 1; mask < masks; ++mask) {
        int low = std::countr_zero(static_cast<unsigned>(mask));
        reach[w * masks + mask] =
            std::max(reach[w * masks + (mask & (mask - 1))], dist(w, low));
      }
    }
    for (int mask = 1; mask < masks; ++mask) {
      int r = std::numeric_limits<int>::max();
      for (int w = 0; w < n; ++w) r = std::min(r, reach[w * masks + mask]);
      radius[mask] = r;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(n), reach;
  std::vector<unsigned> bag(n);
  int best = radius[masks - 1];
  do {
    for (int p = 0; p < n; ++p) position[order[p]] = p;
    left_reaches(g, order, position, reach);
    // bag[p]: the clique of closure right-neighbors rooted at position p.
    for (int p = 0; p < n; ++p) bag[p] = 1u << order[p];
    for (int c = 0; c < n; ++c) {
      for (int b = reach[c]; b < c; ++b) bag[b] |= 1u << order[c];
    }
    int breadth = 0;
    for (int p = 0; p < n && breadth < best; ++p) {
      breadth = std::max(breadth, radius[bag[p]]);
    }
    best = std::min(best, breadth);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace pathline::oracle
