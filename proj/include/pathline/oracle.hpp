#pragma once

#include <span>

#include "pathline/bandwidth.hpp"
#include "pathline/distortion.hpp"
#include "pathline/graph.hpp"

namespace pathline::oracle {

/// Exponential-time exact references for the four parameters, used as
/// ground truth by the approximation-bound tests. Every function throws
/// when the graph exceeds its size cap; the caps are configuration, not
/// silent fallbacks.

inline constexpr int kBandwidthCap = 24;
inline constexpr int kBandwidthEnumerationCap = 12;
inline constexpr int kDistortionCap = 9;
inline constexpr int kPathCap = 8;

/// Minimum bandwidth via the branch-and-bound layout search.
int exact_bandwidth(const Graph& g, int cap = kBandwidthCap);

/// Minimum bandwidth by plain enumeration of all layouts (reversal
/// symmetry halves the search). Cross-checks the branch-and-bound route.
int exact_bandwidth_enumeration(const Graph& g,
                                int cap = kBandwidthEnumerationCap);

/// Minimum line-distortion: the best canonic embedding over all vertex
/// orderings; for each ordering the distortion is the maximum edge
/// stretch of the exact-distance placement.
int exact_line_distortion(const Graph& g, int cap = kDistortionCap);

/// The lexicographically first ordering attaining exact_line_distortion,
/// as a canonic embedding.
LineEmbedding optimal_canonic_embedding(const Graph& g,
                                        int cap = kDistortionCap);

/// Minimal edge superset of E closed under the interval-ordering rule
/// "order(a) < order(b) < order(c) and ac an edge forces bc": an
/// interval supergraph admitting `order` as interval ordering.
Graph interval_closure(const Graph& g, std::span<const int> order);

/// Minimum over vertex orderings of the maximum in-G distance across an
/// interval_closure edge: the exact path-length pl(G).
int exact_path_length(const Graph& g, int cap = kPathCap);

/// Minimum over vertex orderings of the largest clique radius of the
/// closure: the exact path-breadth pb(G).
int exact_path_breadth(const Graph& g, int cap = kPathCap);

}  // namespace pathline::oracle
