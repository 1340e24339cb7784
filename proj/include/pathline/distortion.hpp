#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pathline/domination.hpp"
#include "pathline/graph.hpp"

namespace pathline {

/// Non-contractive embedding of the vertices into integer points of the
/// line. positions[v] is the coordinate of v; the leftmost vertex sits
/// at 0. The distortion equals the maximum edge stretch, which bounds
/// the stretch of every pair once the embedding is non-contractive.
struct LineEmbedding {
  std::vector<int> positions;
  int distortion = 0;
};

/// Distortion of the given positions. Checks injectivity and
/// non-contractiveness on consecutive pairs of the line (sufficient for
/// all pairs) and throws with the violating pair otherwise.
int embedding_distortion(const Graph& g, std::span<const int> positions);

/// Wraps positions (shifted so the minimum is 0) with their distortion.
LineEmbedding make_embedding(const Graph& g, std::vector<int> positions);

/// Places order[0] at 0 and each following vertex at the previous
/// position plus their exact graph distance. Non-contractive by
/// construction.
LineEmbedding canonic_embedding(const Graph& g, std::span<const int> order);

/// Embeds a connected vertex set: DFS first-visit order from the
/// smallest-id vertex of the set (smallest-id neighbor first), with
/// consecutive spacing equal to graph distance. Returns (vertex,
/// position) pairs in visit order; the total span is at most 2|S| - 2.
/// Throws if the set does not induce a connected subgraph.
std::vector<std::pair<int, int>> embed_connected_set(const Graph& g,
                                                     std::span<const int> set);

/// Line embedding from a k-dominating shortest path: the BFS branch set
/// of each path vertex is embedded via embed_connected_set, blocks
/// follow the path order, and consecutive blocks are separated by a gap
/// of 2k + 1. Distortion is at most (8k + 4) ld(G) + (2k)^2 + 2k + 1.
LineEmbedding embedding_from_dominating_path(const Graph& g,
                                             const DominatingPath& path);

}  // namespace pathline
