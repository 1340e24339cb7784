#pragma once

#include <span>
#include <vector>

#include "pathline/graph.hpp"

namespace pathline {

/// A shortest path whose vertices collectively k-dominate the graph:
/// every vertex is within distance `radius` of some path vertex.
struct DominatingPath {
  std::vector<int> vertices;
  int radius = 0;
};

/// A vertex pair such that every x,y-path is a radius-dominating path.
struct DominatingPair {
  int x = 0;
  int y = 0;
  int radius = 0;
};

/// max over v of d(v, path), via multi-source BFS.
int path_domination_radius(const Graph& g, std::span<const int> path);

/// Throws unless consecutive vertices are adjacent, the sequence is a
/// shortest path between its endpoints, and the radius matches.
void validate_dominating_path(const Graph& g, const DominatingPath& p);

/// Double-BFS sweep: s = 0, x farthest from s, y farthest from x
/// (smallest id on ties), returning the smallest-id-parent shortest
/// x,y-path. Its radius is at most 2 pl(G).
DominatingPath double_bfs_dominating_path(const Graph& g);

/// Examines one shortest path per vertex pair x < y (smallest-id BFS
/// parents) and returns the minimum-radius one, breaking ties by the
/// lexicographically smallest pair. The radius is at most pl(G).
DominatingPath best_dominating_shortest_path(const Graph& g);

/// Minimum k admitting a k-dominating pair, found by binary search over
/// k in [0, radius(G)]; per probed k, a pair (x, y) qualifies iff for
/// every vertex w outside D(x,k) and D(y,k) the removal of D(w,k)
/// separates x from y. Returns the lexicographically smallest pair.
DominatingPair min_dominating_pair(const Graph& g);

/// Branch sets of the BFS(path, G) tree: branch i holds the vertices
/// whose tree root is path[i] (ties to the smallest-id parent, path
/// vertices rooted at themselves), each sorted by id. Every branch is
/// a connected set.
std::vector<std::vector<int>> path_branch_sets(const Graph& g,
                                               std::span<const int> path);

}  // namespace pathline
