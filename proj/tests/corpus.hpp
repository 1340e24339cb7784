#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathline/graph.hpp"

namespace pathline::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small named graphs exercised throughout the suite (cycles, cliques,
/// paths, stars, caterpillars, complement cycles, interval samples).
std::vector<NamedGraph> named_corpus();

/// Named graphs with n <= 8 plus at least 200 seeded random connected
/// graphs: the oracle-backed corpus.
std::vector<NamedGraph> oracle_corpus();

/// At least 100 seeded random permutation models (connected permutation
/// graphs), sizes up to 60.
std::vector<std::vector<int>> permutation_model_corpus();

/// Permutation model whose permutation graph is connected; deterministic
/// in (n, seed) by advancing the seed until connected.
std::vector<int> connected_permutation_model(int n, std::uint64_t seed);

/// Random connected interval graph (intersection graph of n random
/// integer intervals), deterministic in (n, seed).
Graph random_interval_graph(int n, std::uint64_t seed);

/// AT-free members of the corpus with n <= 8: named AT-free graphs plus
/// small permutation-model graphs.
std::vector<NamedGraph> atfree_corpus_small();

}  // namespace pathline::testing
