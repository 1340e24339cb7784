#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathline/atfree.hpp"
#include "pathline/bandwidth.hpp"
#include "pathline/certificates.hpp"
#include "pathline/decomposition.hpp"
#include "pathline/distortion.hpp"
#include "pathline/domination.hpp"
#include "pathline/generators.hpp"
#include "pathline/graph.hpp"
#include "pathline/oracle.hpp"

namespace {

using nlohmann::json;
using namespace pathline;

void emit(const json& document) { std::cout << document.dump(2) << "\n"; }

Graph read_graph_stdin() { return parse_graph(std::cin); }

// Reference values for --bound: exact when the oracle cap allows,
// otherwise the local-density lower bound stands in.
struct BoundReference {
  long long value = 0;
  bool exact = false;
};

BoundReference bandwidth_reference(const Graph& g) {
  if (g.vertex_count() <= 16) {
    return {oracle::exact_bandwidth(g), true};
  }
  auto dist = all_pairs_distances(g);
  return {local_density_bound(g, dist), false};
}

BoundReference distortion_reference(const Graph& g) {
  if (g.vertex_count() <= oracle::kDistortionCap) {
    return {oracle::exact_line_distortion(g), true};
  }
  auto dist = all_pairs_distances(g);
  return {local_density_bound(g, dist), false};
}

void require_at_free(const Graph& g, bool force) {
  if (force) return;
  auto witness = is_at_free(g);
  if (!witness.at_free) {
    throw std::invalid_argument(
        "graph is not AT-free (asteroidal triple " +
        std::to_string(witness.triple[0]) + ", " +
        std::to_string(witness.triple[1]) + ", " +
        std::to_string(witness.triple[2]) + "); pass --force to override");
  }
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed) {
  auto arg = [&](size_t i) -> int {
    if (i >= params.size()) {
      throw std::invalid_argument("missing parameter for family " + family);
    }
    return std::stoi(params[i]);
  };
  if (family == "cycle") {
    std::cout << serialize_graph(make_cycle(arg(0)));
  } else if (family == "clique") {
    std::cout << serialize_graph(make_clique(arg(0)));
  } else if (family == "path") {
    std::cout << serialize_graph(make_path(arg(0)));
  } else if (family == "star") {
    std::cout << serialize_graph(make_star(arg(0)));
  } else if (family == "caterpillar") {
    std::cout << serialize_graph(make_caterpillar(arg(0), arg(1)));
  } else if (family == "complement-cycle") {
    std::cout << serialize_graph(make_complement_cycle(arg(0)));
  } else if (family == "random-connected") {
    double p = std::stod(params.size() > 1 ? params[1] : "");
    std::cout << serialize_graph(random_connected(arg(0), p, seed));
  } else if (family == "permutation-model") {
    auto model = random_permutation_model(arg(0), seed);
    for (size_t i = 0; i < model.size(); ++i) {
      std::cout << (i ? " " : "") << model[i];
    }
    std::cout << "\n";
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return 0;
}

int run_decompose(const std::string& kind, bool prune, bool force) {
  json cert;
  if (kind == "extended" || kind == "atfree") {
    Graph g = read_graph_stdin();
    PathDecomposition pd = kind == "extended"
                               ? extended_layering_best(g)
                               : atfree_decomposition(g, prune, force);
    if (kind == "extended" && prune) pd = prune_nested_bags(std::move(pd));
    auto dist = all_pairs_distances(g);
    cert = decomposition_certificate(g, pd, metrics(g, pd, dist));
  } else {
    ModelDecomposition result = [&]() {
      if (kind == "permutation") {
        return permutation_decomposition(parse_permutation_model(std::cin));
      }
      if (kind == "trapezoid") {
        return trapezoid_decomposition(parse_trapezoid_model(std::cin));
      }
      if (kind == "convex-bipartite") {
        auto [q, intervals] = parse_convex_bipartite_model(std::cin);
        return convex_bipartite_decomposition(q, intervals);
      }
      throw std::invalid_argument("unknown decomposition kind: " + kind);
    }();
    PathDecomposition pd = result.decomposition;
    if (prune) pd = prune_nested_bags(std::move(pd));
    auto dist = all_pairs_distances(result.graph);
    cert = decomposition_certificate(result.graph, pd,
                                     metrics(result.graph, pd, dist));
  }
  emit(cert);
  return 0;
}

int run_bandwidth(const std::string& method, bool bound, bool force, int cap) {
  Graph g = read_graph_stdin();
  Layout layout;
  int radius = -1;
  long long guarantee = -1;
  BoundReference ref;
  if (bound) ref = bandwidth_reference(g);

  if (method == "dompath" || method == "dompath-fast") {
    DominatingPath path = method == "dompath"
                              ? best_dominating_shortest_path(g)
                              : double_bfs_dominating_path(g);
    radius = path.radius;
    layout = layout_from_dominating_path(g, path);
    if (bound) guarantee = (4LL * radius + 2) * ref.value;
  } else if (method == "decomposition") {
    auto pd = extended_layering_best(g);
    auto dist = all_pairs_distances(g);
    auto m = metrics(g, pd, dist);
    layout = layout_from_decomposition(g, pd, cap);
    if (bound) guarantee = static_cast<long long>(m.length) * ref.value;
  } else if (method == "atfree") {
    require_at_free(g, force);
    layout = atfree_layout(g);
    if (bound) guarantee = 4LL * ref.value;
  } else if (method == "exact") {
    layout = exact_bandwidth_layout(g, cap);
  } else {
    throw std::invalid_argument("unknown bandwidth method: " + method);
  }

  json cert = layout_certificate(g, layout);
  cert["method"] = method;
  if (radius >= 0) cert["k"] = radius;
  if (guarantee >= 0) {
    cert["bound"] = guarantee;
    cert["bound_exact"] = ref.exact;
  }
  emit(cert);
  return 0;
}

int run_distortion(const std::string& method, bool bound, bool force,
                   int cap) {
  Graph g = read_graph_stdin();
  LineEmbedding embedding;
  int radius = -1;
  long long guarantee = -1;
  BoundReference ref;
  if (bound) ref = distortion_reference(g);

  if (method == "dompath" || method == "dompath-fast") {
    DominatingPath path = method == "dompath"
                              ? best_dominating_shortest_path(g)
                              : double_bfs_dominating_path(g);
    radius = path.radius;
    embedding = embedding_from_dominating_path(g, path);
    if (bound) {
      long long k = radius;
      guarantee = (8 * k + 4) * ref.value + (2 * k) * (2 * k) + 2 * k + 1;
    }
  } else if (method == "atfree") {
    require_at_free(g, force);
    embedding = atfree_embedding(g);
    if (bound) guarantee = 8LL * ref.value;
  } else if (method == "exact") {
    embedding = oracle::optimal_canonic_embedding(g, cap);
  } else {
    throw std::invalid_argument("unknown distortion method: " + method);
  }

  json cert = embedding_certificate(g, embedding);
  cert["method"] = method;
  if (radius >= 0) cert["k"] = radius;
  if (guarantee >= 0) {
    cert["bound"] = guarantee;
    cert["bound_exact"] = ref.exact;
  }
  emit(cert);
  return 0;
}

int run_dompath(const std::string& variant) {
  Graph g = read_graph_stdin();
  DominatingPath path = variant == "fast" ? double_bfs_dominating_path(g)
                                          : best_dominating_shortest_path(g);
  emit(dominating_path_certificate(g, path));
  return 0;
}

int run_dompair() {
  Graph g = read_graph_stdin();
  emit(dominating_pair_certificate(g, min_dominating_pair(g)));
  return 0;
}

int run_verify(const std::string& kind) {
  json document = json::parse(std::cin);
  VerifyResult result;
  if (kind == "decomposition") {
    result = verify_decomposition_certificate(document);
  } else if (kind == "layout") {
    result = verify_layout_certificate(document);
  } else if (kind == "embedding") {
    result = verify_embedding_certificate(document);
  } else {
    throw std::invalid_argument("unknown verify kind: " + kind);
  }
  json report{{"ok", result.ok}};
  if (!result.ok) report["violation"] = result.message;
  emit(report);
  return result.ok ? 0 : 2;
}

int run_oracle(const std::string& parameter, int cap) {
  Graph g = read_graph_stdin();
  int value = 0;
  if (parameter == "bandwidth") {
    value = oracle::exact_bandwidth(g, cap > 0 ? cap : oracle::kBandwidthCap);
  } else if (parameter == "distortion") {
    value = oracle::exact_line_distortion(
        g, cap > 0 ? cap : oracle::kDistortionCap);
  } else if (parameter == "path-length") {
    value = oracle::exact_path_length(g, cap > 0 ? cap : oracle::kPathCap);
  } else if (parameter == "path-breadth") {
    value = oracle::exact_path_breadth(g, cap > 0 ? cap : oracle::kPathCap);
  } else {
    throw std::invalid_argument("unknown oracle parameter: " + parameter);
  }
  emit(json{{"graph", graph_to_json(g)},
            {"parameter", parameter},
            {"value", value}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Path-decompositions, dominating paths, and approximations of "
      "bandwidth and line-distortion for unweighted connected graphs"};
  app.require_subcommand(1);

  // gen
  std::string family;
  std::vector<std::string> family_params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a graph family on stdout");
  gen->add_option("family", family,
                  "cycle | clique | path | star | caterpillar | "
                  "random-connected | complement-cycle | permutation-model")
      ->required();
  gen->add_option("params", family_params, "family parameters");
  gen->add_option("--seed", seed, "random seed");

  // decompose
  std::string decompose_kind;
  bool prune = false, force = false;
  auto* decompose =
      app.add_subcommand("decompose", "emit a path-decomposition certificate");
  decompose
      ->add_option("kind", decompose_kind,
                   "extended | atfree | permutation | trapezoid | "
                   "convex-bipartite")
      ->required();
  decompose->add_flag("--prune-bags", prune, "drop bags nested in a neighbor");
  decompose->add_flag("--force", force, "skip the AT-free recognition check");

  // bandwidth
  std::string bw_method, bw_method_flag;
  bool bw_bound = false, bw_force = false;
  int bw_cap = kDefaultExactBandwidthCap;
  auto* bandwidth_cmd =
      app.add_subcommand("bandwidth", "emit a layout certificate");
  bandwidth_cmd->add_option(
      "METHOD", bw_method,
      "dompath | dompath-fast | decomposition | atfree | exact");
  bandwidth_cmd->add_option("--method", bw_method_flag, "method (flag form)");
  bandwidth_cmd->add_flag("--bound", bw_bound,
                          "attach the approximation guarantee");
  bandwidth_cmd->add_flag("--force", bw_force, "skip AT-free recognition");
  bandwidth_cmd->add_option("--cap", bw_cap, "exact-search size guard");

  // distortion
  std::string ld_method, ld_method_flag;
  bool ld_bound = false, ld_force = false;
  int ld_cap = oracle::kDistortionCap;
  auto* distortion_cmd =
      app.add_subcommand("distortion", "emit a line-embedding certificate");
  distortion_cmd->add_option("METHOD", ld_method,
                             "dompath | dompath-fast | atfree | exact");
  distortion_cmd->add_option("--method", ld_method_flag,
                             "method (flag form)");
  distortion_cmd->add_flag("--bound", ld_bound,
                           "attach the approximation guarantee");
  distortion_cmd->add_flag("--force", ld_force, "skip AT-free recognition");
  distortion_cmd->add_option("--cap", ld_cap, "exact-search size guard");

  // dompath / dompair
  std::string dompath_variant;
  auto* dompath_cmd =
      app.add_subcommand("dompath", "emit a dominating shortest path");
  dompath_cmd->add_option("variant", dompath_variant, "fast | best")
      ->required();
  auto* dompair_cmd =
      app.add_subcommand("dompair", "emit a minimum dominating pair");

  // verify
  std::string verify_kind;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a certificate read from stdin");
  verify_cmd
      ->add_option("kind", verify_kind, "decomposition | layout | embedding")
      ->required();

  // oracle
  std::string oracle_parameter;
  int oracle_cap = 0;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact value by exhaustive search");
  oracle_cmd
      ->add_option("parameter", oracle_parameter,
                   "bandwidth | distortion | path-length | path-breadth")
      ->required();
  oracle_cmd->add_option("--cap", oracle_cap, "size guard override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) return app.exit(error);  // --help
    app.exit(error);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(family, family_params, seed);
    if (decompose->parsed()) return run_decompose(decompose_kind, prune, force);
    if (bandwidth_cmd->parsed()) {
      std::string method = !bw_method_flag.empty() ? bw_method_flag : bw_method;
      if (method.empty()) {
        throw std::invalid_argument("bandwidth requires a method");
      }
      return run_bandwidth(method, bw_bound, bw_force, bw_cap);
    }
    if (distortion_cmd->parsed()) {
      std::string method = !ld_method_flag.empty() ? ld_method_flag : ld_method;
      if (method.empty()) {
        throw std::invalid_argument("distortion requires a method");
      }
      return run_distortion(method, ld_bound, ld_force, ld_cap);
    }
    if (dompath_cmd->parsed()) return run_dompath(dompath_variant);
    if (dompair_cmd->parsed()) return run_dompair();
    if (verify_cmd->parsed()) return run_verify(verify_kind);
    if (oracle_cmd->parsed()) return run_oracle(oracle_parameter, oracle_cap);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
