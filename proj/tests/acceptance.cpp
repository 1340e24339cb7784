// Acceptance suite: runs every acceptance criterion against the corpus
// (named graphs, 210 seeded random connected graphs, 110 seeded
// permutation models) and prints one pass/fail line per criterion.
// Returns nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "pathline/atfree.hpp"
#include "pathline/bandwidth.hpp"
#include "pathline/certificates.hpp"
#include "pathline/decomposition.hpp"
#include "pathline/distortion.hpp"
#include "pathline/domination.hpp"
#include "pathline/generators.hpp"
#include "pathline/oracle.hpp"

using namespace pathline;
using pathline::testing::NamedGraph;

namespace {

struct Criterion {
  int checks = 0;
  int violations = 0;
  std::string first_failure;

  void expect(bool condition, const std::string& context) {
    ++checks;
    if (!condition) {
      ++violations;
      if (first_failure.empty()) first_failure = context;
    }
  }
};

int exit_status = 0;

void report(int id, const std::string& title, const Criterion& c) {
  if (c.violations == 0 && c.checks > 0) {
    std::printf("criterion %2d: PASS  %s (%d checks)\n", id, title.c_str(),
                c.checks);
  } else {
    std::printf("criterion %2d: FAIL  %s (%d of %d checks failed; first: %s)\n",
                id, title.c_str(), c.violations, c.checks,
                c.first_failure.c_str());
    exit_status = 1;
  }
  std::fflush(stdout);
}

struct OracleValues {
  int pl = 0, pb = 0, ld = 0, bw = 0;
};

OracleValues oracle_values(const Graph& g) {
  OracleValues v;
  v.pl = oracle::exact_path_length(g);
  v.pb = oracle::exact_path_breadth(g);
  v.ld = oracle::exact_line_distortion(g);
  v.bw = oracle::exact_bandwidth(g);
  return v;
}

bool non_contractive_all_pairs(const Graph& g, const DistanceMatrix& dist,
                               const std::vector<int>& positions) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (std::abs(positions[u] - positions[v]) < dist(u, v)) return false;
    }
  }
  return true;
}

struct RunResult {
  std::string output;
  int exit_code = -1;
};

RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  std::printf("building corpus...\n");
  std::fflush(stdout);
  auto corpus = pathline::testing::oracle_corpus();
  auto models = pathline::testing::permutation_model_corpus();
  auto atfree_small = pathline::testing::atfree_corpus_small();

  std::map<std::string, OracleValues> oracle_cache;
  std::map<std::string, DistanceMatrix> distance_cache;
  for (const auto& entry : corpus) {
    oracle_cache.emplace(entry.name, oracle_values(entry.graph));
    distance_cache.emplace(entry.name, DistanceMatrix(entry.graph));
  }
  std::printf("corpus ready: %zu oracle graphs, %zu permutation models, "
              "%zu small AT-free graphs\n",
              corpus.size(), models.size(), atfree_small.size());
  std::fflush(stdout);

  // 1. Named-value reproduction (exact, tolerance 0).
  {
    Criterion c;
    c.expect(oracle::exact_bandwidth(make_cycle(6)) == 2, "bw(C6)");
    c.expect(oracle::exact_line_distortion(make_cycle(6)) == 5, "ld(C6)");
    c.expect(oracle::exact_path_length(make_cycle(6)) == 3, "pl(C6)");
    c.expect(oracle::exact_path_length(make_cycle(4)) == 2, "pl(C4)");
    for (int n : {3, 4, 5}) {
      Graph k = make_clique(n);
      c.expect(oracle::exact_path_length(k) == 1,
               "pl(K" + std::to_string(n) + ")");
      c.expect(oracle::exact_line_distortion(k) == n - 1,
               "ld(K" + std::to_string(n) + ")");
      c.expect(oracle::exact_bandwidth(k) == n - 1,
               "bw(K" + std::to_string(n) + ")");
    }
    c.expect(oracle::exact_path_breadth(make_complement_cycle(6)) == 2,
             "pb(co-C6)");
    for (int i = 0; i < 10; ++i) {
      Graph g = pathline::testing::random_interval_graph(3 + i % 6, 500 + i);
      c.expect(oracle::exact_path_length(g) == 1,
               "pl(interval sample " + std::to_string(i) + ")");
    }
    report(1, "named values: bw/ld/pl/pb on cycles, cliques, co-C6, "
              "interval graphs", c);
  }

  // 2. Extended layering: length <= 2 pl, breadth <= 3 pb.
  {
    Criterion c;
    for (const auto& entry : corpus) {
      const auto& v = oracle_cache.at(entry.name);
      auto pd = extended_layering_best(entry.graph);
      auto m = metrics(entry.graph, pd, distance_cache.at(entry.name));
      c.expect(validate(entry.graph, pd).ok, entry.name + " validates");
      c.expect(m.length <= 2 * v.pl, entry.name + " length bound");
      c.expect(m.breadth <= 3 * v.pb, entry.name + " breadth bound");
    }
    report(2, "extended layering within 2*pl and 3*pb", c);
  }

  // 3. Dominating-path layouts: bandwidth <= (4k+2) bw, with k <= pl for
  //    the pairwise path and k <= 2 pl for the double-BFS path.
  {
    Criterion c;
    for (const auto& entry : corpus) {
      const auto& v = oracle_cache.at(entry.name);
      auto best_path = best_dominating_shortest_path(entry.graph);
      auto fast_path = double_bfs_dominating_path(entry.graph);
      c.expect(best_path.radius <= v.pl, entry.name + " best-path radius");
      c.expect(fast_path.radius <= 2 * v.pl, entry.name + " fast-path radius");
      auto best_layout = layout_from_dominating_path(entry.graph, best_path);
      auto fast_layout = layout_from_dominating_path(entry.graph, fast_path);
      c.expect(best_layout.bandwidth <= (4 * best_path.radius + 2) * v.bw,
               entry.name + " best (4k+2) bound");
      c.expect(best_layout.bandwidth <= (4 * v.pl + 2) * v.bw,
               entry.name + " best (4pl+2) bound");
      c.expect(fast_layout.bandwidth <= (4 * fast_path.radius + 2) * v.bw,
               entry.name + " fast (4k+2) bound");
      c.expect(fast_layout.bandwidth <= (8 * v.pl + 2) * v.bw,
               entry.name + " fast (8pl+2) bound");
      c.expect(min_dominating_pair(entry.graph).radius <= v.pl,
               entry.name + " dominating pair within pl");
    }
    report(3, "dominating-path bandwidth within (4k+2)*bw", c);
  }

  // 4. Decomposition layout: bandwidth <= length * bw; chained pipeline
  //    within 2 * pl * bw.
  {
    Criterion c;
    for (const auto& entry : corpus) {
      const auto& v = oracle_cache.at(entry.name);
      auto pd = extended_layering_best(entry.graph);
      auto m = metrics(entry.graph, pd, distance_cache.at(entry.name));
      auto layout = layout_from_decomposition(entry.graph, pd);
      c.expect(layout.bandwidth <= m.length * v.bw,
               entry.name + " length*bw bound");
      c.expect(layout.bandwidth <= 2 * v.pl * v.bw,
               entry.name + " 2*pl*bw pipeline bound");
    }
    report(4, "interval-completion layouts within length*bw and 2*pl*bw", c);
  }

  // 5. Dominating-path embeddings: non-contractive over all pairs;
  //    distortion within (12 pl + 7) ld resp. (24 pl + 7) ld.
  {
    Criterion c;
    for (const auto& entry : corpus) {
      const auto& v = oracle_cache.at(entry.name);
      const auto& dist = distance_cache.at(entry.name);
      auto best_path = best_dominating_shortest_path(entry.graph);
      auto fast_path = double_bfs_dominating_path(entry.graph);
      for (bool fast : {false, true}) {
        const auto& path = fast ? fast_path : best_path;
        auto f = embedding_from_dominating_path(entry.graph, path);
        long long k = path.radius;
        c.expect(non_contractive_all_pairs(entry.graph, dist, f.positions),
                 entry.name + " non-contractive");
        c.expect(f.distortion <=
                     (8 * k + 4) * v.ld + (2 * k) * (2 * k) + 2 * k + 1,
                 entry.name + " per-path distortion bound");
        long long factor = fast ? 24 * v.pl + 7 : 12 * v.pl + 7;
        c.expect(f.distortion <= factor * v.ld,
                 entry.name + (fast ? " (24pl+7)ld" : " (12pl+7)ld"));
        if (!fast) {
          c.expect(f.distortion <= (12LL * v.ld + 7) * v.ld,
                   entry.name + " (12ld+7)ld sanity");
        }
      }
    }
    report(5, "dominating-path embeddings within (12pl+7)*ld / (24pl+7)*ld",
           c);
  }

  // 6. AT-free decomposition validates with length <= 2, models up to 60.
  {
    Criterion c;
    for (size_t i = 0; i < models.size(); ++i) {
      Graph g = permutation_decomposition(models[i]).graph;
      auto pd = atfree_decomposition(g);
      c.expect(validate(g, pd).ok, "model " + std::to_string(i));
      auto dist = all_pairs_distances(g);
      int length = 0;
      for (const auto& bag : pd.bags) {
        for (int u : bag) {
          for (int w : bag) length = std::max(length, dist(u, w));
        }
      }
      c.expect(length <= 2, "model " + std::to_string(i) + " length<=2");

      // the greedy layering-path construction must never fail on AT-free
      // input, and its embedding stays non-contractive at full scale
      auto kkm = kkm_layering_path(g);
      c.expect(path_domination_radius(g, kkm.path) <= 1,
               "model " + std::to_string(i) + " dominating layering path");
      auto f = atfree_embedding(g);
      c.expect(non_contractive_all_pairs(g, dist, f.positions),
               "model " + std::to_string(i) + " embedding non-contractive");
    }
    for (const auto& entry : atfree_small) {
      auto pd = atfree_decomposition(entry.graph);
      auto m = metrics(entry.graph, pd, all_pairs_distances(entry.graph));
      c.expect(m.length <= 2, entry.name + " length<=2");
      c.expect(m.breadth <= 2, entry.name + " breadth<=2");
    }
    // second-sweep LBFS numbering is an interval ordering of the
    // completion, checked on all triples at the largest model size
    for (size_t i = 0; i < models.size(); i += 37) {
      Graph g = permutation_decomposition(models[i]).graph;
      auto pd = atfree_decomposition(g);
      Graph plus = interval_completion(g, pd);
      auto sigma = lbfs(g, lbfs(g, 0).visit_order.back());
      int n = g.vertex_count();
      bool interval_ordering = true;
      for (int a = 0; a < n && interval_ordering; ++a) {
        for (int b = 0; b < n && interval_ordering; ++b) {
          for (int d = 0; d < n; ++d) {
            if (sigma.number[a] < sigma.number[b] &&
                sigma.number[b] < sigma.number[d] && plus.adjacent(a, d) &&
                !plus.adjacent(b, d)) {
              interval_ordering = false;
              break;
            }
          }
        }
      }
      c.expect(interval_ordering,
               "model " + std::to_string(i) + " interval ordering");
    }
    report(6, "AT-free decompositions validate with length <= 2 (n up to 60)",
           c);
  }

  // 7. AT-free embedding within 8 ld; AT-free layout within 4 bw.
  {
    Criterion c;
    for (const auto& entry : atfree_small) {
      auto v = oracle_values(entry.graph);
      auto dist = all_pairs_distances(entry.graph);
      auto f = atfree_embedding(entry.graph);
      c.expect(non_contractive_all_pairs(entry.graph, dist, f.positions),
               entry.name + " non-contractive");
      c.expect(f.distortion <= 8 * v.ld, entry.name + " 8*ld bound");
      auto layout = atfree_layout(entry.graph);
      c.expect(layout.bandwidth <= 4 * v.bw, entry.name + " 4*bw bound");
      c.expect(min_dominating_pair(entry.graph).radius <= 1,
               entry.name + " 1-dominating pair");
    }
    report(7, "AT-free embedding within 8*ld, layout within 4*bw", c);
  }

  // 8. Model decompositions have breadth exactly 1 with verified centers,
  //    sizes up to 60.
  {
    Criterion c;
    auto check_model = [&](const ModelDecomposition& result,
                           const std::string& name) {
      auto dist = all_pairs_distances(result.graph);
      auto m = metrics(result.graph, result.decomposition, dist);
      c.expect(m.breadth == 1, name + " breadth==1");
      c.expect(result.centers.size() == result.decomposition.bags.size(),
               name + " centers count");
      for (size_t b = 0; b < result.decomposition.bags.size(); ++b) {
        for (int u : result.decomposition.bags[b]) {
          c.expect(dist(result.centers[b], u) <= 1,
                   name + " center witnesses bag");
        }
      }
    };
    for (size_t i = 0; i < models.size(); ++i) {
      check_model(permutation_decomposition(models[i]),
                  "perm" + std::to_string(i));
    }
    std::mt19937_64 rng(97);
    int trapezoid_count = 0;
    while (trapezoid_count < 30) {
      int n = 3 + static_cast<int>(rng() % 58);
      std::vector<Trapezoid> model(n);
      std::uniform_int_distribution<int> coord(0, 2 * n);
      for (auto& t : model) {
        t.upper_lo = coord(rng);
        t.upper_hi = t.upper_lo + static_cast<int>(rng() % 5);
        t.lower_lo = coord(rng);
        t.lower_hi = t.lower_lo + static_cast<int>(rng() % 5);
      }
      try {
        auto result = trapezoid_decomposition(model);
        check_model(result, "trapezoid" + std::to_string(trapezoid_count));
        ++trapezoid_count;
      } catch (const std::invalid_argument&) {
        // disconnected draw, resample
      }
    }
    int convex_count = 0;
    while (convex_count < 30) {
      int q = 2 + static_cast<int>(rng() % 29);
      int p = 1 + static_cast<int>(rng() % 30);
      std::vector<std::pair<int, int>> intervals(p);
      for (auto& [lo, hi] : intervals) {
        lo = 1 + static_cast<int>(rng() % q);
        hi = std::min(q, lo + static_cast<int>(rng() % 4));
      }
      try {
        auto result = convex_bipartite_decomposition(q, intervals);
        check_model(result, "convex" + std::to_string(convex_count));
        ++convex_count;
      } catch (const std::invalid_argument&) {
        // disconnected draw, resample
      }
    }
    report(8, "permutation/trapezoid/convex-bipartite breadth exactly 1 "
              "(n up to 60)", c);
  }

  // 9. Structural chain: pb <= pl <= 2 pb, pl <= ld, pb <= ceil(ld/2),
  //    bw <= ld, local density <= bw.
  {
    Criterion c;
    for (const auto& entry : corpus) {
      const auto& v = oracle_cache.at(entry.name);
      c.expect(v.pb <= v.pl, entry.name + " pb<=pl");
      c.expect(v.pl <= 2 * v.pb, entry.name + " pl<=2pb");
      c.expect(v.pl <= v.ld, entry.name + " pl<=ld");
      c.expect(v.pb <= (v.ld + 1) / 2, entry.name + " pb<=ceil(ld/2)");
      c.expect(v.bw <= v.ld, entry.name + " bw<=ld");
      c.expect(local_density_bound(entry.graph,
                                   distance_cache.at(entry.name)) <= v.bw,
               entry.name + " density<=bw");
    }
    report(9, "structural chain pb<=pl<=2pb, pl<=ld, pb<=ceil(ld/2), "
              "bw<=ld, density<=bw", c);
  }

  // 10. Powers and separation: G^(2pl-1) AT-free; Prop-1 triple
  //     interception; inflated-disk Helly.
  {
    Criterion c;
    std::mt19937_64 rng(131);
    for (const auto& entry : corpus) {
      const auto& v = oracle_cache.at(entry.name);
      const auto& dist = distance_cache.at(entry.name);
      int n = entry.graph.vertex_count();

      Graph power = graph_power(entry.graph, 2 * v.pl - 1);
      c.expect(is_at_free(power).at_free, entry.name + " power AT-free");

      bool triples_ok = true;
      for (int a = 0; a < n && triples_ok; ++a) {
        for (int b = a + 1; b < n && triples_ok; ++b) {
          for (int w = b + 1; w < n && triples_ok; ++w) {
            bool intercepted =
                disk_intercepts(entry.graph, a, v.pl, b, w) ||
                disk_intercepts(entry.graph, b, v.pl, a, w) ||
                disk_intercepts(entry.graph, w, v.pl, a, b);
            if (!intercepted) triples_ok = false;
          }
        }
      }
      c.expect(triples_ok, entry.name + " triple interception");

      // Helly with inflated disks, random radius functions
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<int> support;
        std::vector<int> radius(n, 0);
        for (int x = 0; x < n; ++x) {
          if (rng() % 2) {
            support.push_back(x);
            radius[x] = static_cast<int>(rng() % 3);
          }
        }
        if (support.size() < 2) continue;
        bool pairwise = true;
        for (size_t i = 0; i < support.size() && pairwise; ++i) {
          for (size_t j = i + 1; j < support.size(); ++j) {
            if (dist(support[i], support[j]) >
                radius[support[i]] + radius[support[j]]) {
              pairwise = false;
              break;
            }
          }
        }
        if (!pairwise) continue;
        bool common = false;
        for (int w = 0; w < n && !common; ++w) {
          bool inside_all = true;
          for (int x : support) {
            if (dist(x, w) > radius[x] + v.pb) {
              inside_all = false;
              break;
            }
          }
          common = inside_all;
        }
        c.expect(common, entry.name + " inflated-disk Helly");
      }
    }
    report(10, "powers AT-free, triple interception, inflated-disk Helly", c);
  }

  // 11. CLI closed loop: every certificate re-verifies; identical seeds
  //     give byte-identical outputs.
  {
    Criterion c;
    if (cli.empty()) {
      c.expect(false, "no --cli path given");
    } else {
      struct Pipeline {
        std::string producer;
        std::string verify_kind;  // empty: no verification step
      };
      const std::string perm_model = "echo '3 4 1 2'";
      const std::string trap_model = "printf '1 3 1 3\\n2 5 2 5\\n4 6 4 6\\n'";
      const std::string cb_model = "printf '2 2\\n1 2\\n2 2\\n'";
      std::vector<Pipeline> pipelines = {
          {"gen cycle 6 | $C decompose extended", "decomposition"},
          {"gen cycle 6 | $C decompose extended --prune-bags",
           "decomposition"},
          {"gen random-connected 8 0.5 --seed 7 | $C decompose extended",
           "decomposition"},
          {"gen clique 4 | $C decompose atfree", "decomposition"},
          {"gen path 6 | $C decompose atfree --prune-bags", "decomposition"},
          {"gen cycle 6 | $C bandwidth dompath --bound", "layout"},
          {"gen cycle 6 | $C bandwidth dompath-fast", "layout"},
          {"gen cycle 6 | $C bandwidth decomposition", "layout"},
          {"gen clique 4 | $C bandwidth atfree", "layout"},
          {"gen cycle 6 | $C bandwidth exact", "layout"},
          {"gen cycle 6 | $C distortion dompath --bound", "embedding"},
          {"gen cycle 6 | $C distortion dompath-fast", "embedding"},
          {"gen path 5 | $C distortion atfree", "embedding"},
          {"gen cycle 6 | $C distortion exact", "embedding"},
          {"gen random-connected 7 0.4 --seed 21 | $C bandwidth dompath",
           "layout"},
          {"gen random-connected 7 0.4 --seed 21 | $C distortion dompath-fast",
           "embedding"},
          {"gen caterpillar 3 2 | $C bandwidth dompath", "layout"},
          {"gen complement-cycle 6 | $C distortion dompath", "embedding"},
          {"gen cycle 6 | $C dompath best", ""},
          {"gen cycle 6 | $C dompath fast", ""},
          {"gen cycle 6 | $C dompair", ""},
          {"gen cycle 6 | $C oracle path-length", ""},
          {"gen permutation-model 12 --seed 5 | $C decompose permutation",
           "decomposition"},
      };
      auto substitute = [&](std::string text) {
        std::string result;
        size_t at;
        while ((at = text.find("$C")) != std::string::npos) {
          text.replace(at, 2, cli);
        }
        return text;
      };
      std::vector<std::pair<std::string, std::string>> extra = {
          {perm_model + " | " + cli + " decompose permutation",
           "decomposition"},
          {trap_model + " | " + cli + " decompose trapezoid", "decomposition"},
          {cb_model + " | " + cli + " decompose convex-bipartite",
           "decomposition"},
      };
      std::vector<std::pair<std::string, std::string>> runs;
      for (const auto& p : pipelines) {
        runs.emplace_back(cli + " " + substitute(p.producer), p.verify_kind);
      }
      for (auto& e : extra) runs.push_back(e);

      for (const auto& [command, kind] : runs) {
        auto first = run_command(command);
        auto second = run_command(command);
        c.expect(first.exit_code == 0, command + " exits 0");
        c.expect(!first.output.empty(), command + " produces output");
        c.expect(first.output == second.output,
                 command + " is byte-identical across runs");
        if (!kind.empty()) {
          auto verified =
              run_command(command + " | " + cli + " verify " + kind);
          c.expect(verified.exit_code == 0, command + " | verify " + kind);
        }
      }
      // verify must reject a broken certificate with exit code 2
      std::string breach =
          "printf '{\"graph\":{\"n\":3,\"edges\":[[0,1],[1,2]]},"
          "\"bags\":[[0,1],[1,2],[0]]}' | " +
          cli + " verify decomposition";
      auto rejected = run_command(breach);
      c.expect(rejected.exit_code == 2, "property-3 breach exits 2");
    }
    report(11, "CLI closed loop and byte-identical reruns", c);
  }

  return exit_status;
}
