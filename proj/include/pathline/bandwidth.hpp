#pragma once

#include <span>
#include <vector>

#include "pathline/decomposition.hpp"
#include "pathline/domination.hpp"
#include "pathline/graph.hpp"

namespace pathline {

/// Bijection of the vertices onto positions 1..n together with its
/// bandwidth (maximum edge stretch).
struct Layout {
  std::vector<int> positions;
  int bandwidth = 0;
};

/// Default size guard for exact bandwidth searches.
inline constexpr int kDefaultExactBandwidthCap = 24;

/// Maximum edge stretch of a layout; throws if positions are not a
/// bijection onto {1..n}.
int layout_bandwidth(const Graph& g, std::span<const int> positions);

Layout make_layout(const Graph& g, std::vector<int> positions);

/// Local-density lower bound: max over vertices v and radii r of
/// ceil((|D(v, r)| - 1) / (2r)). Never exceeds bw(G).
int local_density_bound(const Graph& g, const DistanceMatrix& dist);

/// Layout from a k-dominating shortest path: BFS(path, G) branch sets
/// emitted in path order, ascending id inside each set. Bandwidth is at
/// most (4k + 2) bw(G).
Layout layout_from_dominating_path(const Graph& g, const DominatingPath& path);

/// Layout via the interval completion G+ of the decomposition: an exact
/// minimum-bandwidth layout of G+ read back as a layout of G. Bandwidth
/// is at most length(pd) * bw(G). The exact search refuses graphs larger
/// than exact_cap.
Layout layout_from_decomposition(const Graph& g, const PathDecomposition& pd,
                                 int exact_cap = kDefaultExactBandwidthCap);

/// Exact minimum bandwidth by depth-first search over partial layouts
/// with local-density and placement-deadline pruning. Throws when the
/// graph exceeds cap.
int exact_bandwidth(const Graph& g, int cap = kDefaultExactBandwidthCap);

/// Exact minimum bandwidth together with the lexicographically smallest
/// optimal position vector.
Layout exact_bandwidth_layout(const Graph& g,
                              int cap = kDefaultExactBandwidthCap);

}  // namespace pathline
