#pragma once

#include <string>
#include <vector>

#include "pathline/distortion.hpp"
#include "pathline/graph.hpp"

namespace pathline {

/// Ordered bag sequence. A valid path-decomposition covers all vertices,
/// covers every edge inside some bag, and keeps the bags containing any
/// particular vertex contiguous. Bags are stored sorted by vertex id.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;
};

struct ValidationResult {
  bool ok = true;
  std::string violation;  // names the first violated property and witness

  explicit operator bool() const { return ok; }
};

ValidationResult validate(const Graph& g, const PathDecomposition& pd);

/// length: largest in-G diameter of a bag. breadth: smallest r such that
/// every bag fits in some disk of radius r; centers[i] is the smallest-id
/// witness for bag i (it need not lie in the bag).
struct DecompositionMetrics {
  int length = 0;
  int breadth = 0;
  std::vector<int> centers;
};

/// Exact metrics of a valid decomposition; throws on an invalid one.
DecompositionMetrics metrics(const Graph& g, const PathDecomposition& pd,
                             const DistanceMatrix& dist);

/// Extended layering from one start vertex: bag i (i >= 1) is L_i plus
/// the previous-layer vertices with a neighbor in L_i.
PathDecomposition extended_layering(const Graph& g, int start);

/// Extended layering over all start vertices, keeping the one of minimum
/// length (smallest start id on ties). Length is at most 2 pl(G).
PathDecomposition extended_layering_best(const Graph& g);

/// Bags B_v = vertices placed in [f(v), f(v) + k], ordered by f(v).
/// A non-canonic input embedding is first re-spaced so that consecutive
/// vertices sit exactly their graph distance apart (order preserved,
/// distortion never increased). Throws if the input is contractive or
/// its canonic distortion exceeds k. The result has length <= k,
/// breadth <= ceil(k / 2), and bag size <= k + 1.
PathDecomposition decomposition_from_embedding(const Graph& g,
                                               const LineEmbedding& f, int k);

/// G+ with an edge for every pair sharing a bag: an interval supergraph
/// of G whose edges span distance at most length(pd) in G.
Graph interval_completion(const Graph& g, const PathDecomposition& pd);

/// Drops bags contained in an adjacent bag until none remain. Preserves
/// validity and metrics of interest.
PathDecomposition prune_nested_bags(PathDecomposition pd);

}  // namespace pathline
