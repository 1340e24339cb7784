#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathline/atfree.hpp"
#include "pathline/graph.hpp"

namespace pathline {

enum class FamilyKind {
  cycle,
  clique,
  path,
  star,
  caterpillar,
  random_connected,
  complement_cycle,
};

/// Parameters for the graph families used by the corpus and the CLI.
/// Random generation is a pure function of the seed.
struct FamilySpec {
  FamilyKind kind = FamilyKind::cycle;
  int n = 0;                     // cycle/clique/path/complement_cycle size
  int leaves = 0;                // star
  int spine = 0;                 // caterpillar spine length
  int hair = 0;                  // caterpillar hair length per spine vertex
  double edge_probability = 0.0; // random_connected
  std::uint64_t seed = 0;        // random_connected
};

Graph generate(const FamilySpec& spec);

Graph make_cycle(int n);
Graph make_clique(int n);
Graph make_path(int n);
Graph make_star(int leaves);
/// Spine path of `spine` vertices, one hair of `hair` vertices per spine
/// vertex.
Graph make_caterpillar(int spine, int hair);
Graph make_complement_cycle(int n);
/// G(n, p) resampled until connected; throws after the attempt budget.
Graph random_connected(int n, double edge_probability, std::uint64_t seed);

/// Seed-deterministic random permutation of 1..n (always an AT-free
/// model).
std::vector<int> random_permutation_model(int n, std::uint64_t seed);

/// Edge-list text: first non-comment line "n m", then m lines "u v" with
/// 0-based ids; '#' starts a comment line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Single line of n space-separated integers.
std::vector<int> parse_permutation_model(std::istream& in);
/// One line "a b c d" per trapezoid: upper [a,b], lower [c,d].
std::vector<Trapezoid> parse_trapezoid_model(std::istream& in);
/// First line "q p", then p lines "l r" (1-based intervals over U).
std::pair<int, std::vector<std::pair<int, int>>> parse_convex_bipartite_model(
    std::istream& in);

}  // namespace pathline
