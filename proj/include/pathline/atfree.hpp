#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "pathline/bandwidth.hpp"
#include "pathline/decomposition.hpp"
#include "pathline/distortion.hpp"
#include "pathline/graph.hpp"

namespace pathline {

/// Lexicographic BFS numbering: the start vertex gets n, later-visited
/// vertices get smaller numbers. Ties go to the smallest vertex id.
struct LbfsOrder {
  std::vector<int> number;       // vertex -> number in {1..n}
  std::vector<int> visit_order;  // vertices by descending number
};

LbfsOrder lbfs(const Graph& g, int start);

struct AtFreeWitness {
  bool at_free = true;
  std::array<int, 3> triple{-1, -1, -1};  // first asteroidal triple found
};

/// Brute-force recognition: a triple of pairwise non-adjacent vertices is
/// asteroidal iff for each member the other two stay connected after the
/// member's closed neighborhood is removed.
AtFreeWitness is_at_free(const Graph& g);

/// Path-decomposition of length at most 2 for an AT-free graph: two LBFS
/// sweeps, layer completion plus down-neighborhood absorption give an
/// interval supergraph of G^2 whose clique path is read off the second
/// LBFS order. Refuses non-AT-free input unless force is set (the length
/// guarantee is void then). With prune, bags nested in a neighbor are
/// dropped.
PathDecomposition atfree_decomposition(const Graph& g, bool prune = false,
                                       bool force = false);

/// Dominating shortest path v_0..v_k plus the layering from v_0 such
/// that every vertex of layer i is adjacent to v_i or v_{i-1}.
struct KkmStructure {
  std::vector<int> path;
  Layering layering;
};

/// Builds the structure greedily from a double-LBFS dominating-pair
/// endpoint and verifies the layer condition; throws if the greedy
/// choice fails (non-AT-free input or a violated assumption).
KkmStructure kkm_layering_path(const Graph& g);

/// Line embedding with distortion at most 8 ld(G) for AT-free graphs:
/// each layer splits into the path vertex, its layer neighbors, and the
/// rest; blocks are laid out in order with exact-distance spacing.
LineEmbedding atfree_embedding(const Graph& g);

/// The vertex order of atfree_embedding as a layout; bandwidth at most
/// 4 bw(G) for AT-free graphs.
Layout atfree_layout(const Graph& g);

/// Intersection-model decomposition: the derived graph, a breadth-1
/// path-decomposition, and the per-bag center vertices.
struct ModelDecomposition {
  Graph graph;
  PathDecomposition decomposition;
  std::vector<int> centers;
};

/// Permutation graph of a permutation of {1..n} (vertex i-1 has upper
/// point i, lower point at the position of i in the model) and the bags
/// N[x_1], ..., N[x_k] over the greedy leftmost maximal independent set.
ModelDecomposition permutation_decomposition(std::span<const int> model);

/// Axis-parallel trapezoid between two horizontal lines; degenerate
/// forms (triangles, segments, points) are allowed and shared endpoints
/// count as intersection.
struct Trapezoid {
  int upper_lo = 0;
  int upper_hi = 0;
  int lower_lo = 0;
  int lower_hi = 0;
};

/// Trapezoid graph decomposition via the two-diagonal permutation model:
/// the 2n diagonals are swept as in permutation_decomposition, then each
/// diagonal pair is contracted back to its trapezoid.
ModelDecomposition trapezoid_decomposition(std::span<const Trapezoid> model);

/// Convex bipartite graph from per-v intervals over the ordered side U
/// (1-based, inclusive); bags are N[u_1], ..., N[u_q].
ModelDecomposition convex_bipartite_decomposition(
    int u_count, std::span<const std::pair<int, int>> v_intervals);

}  // namespace pathline
