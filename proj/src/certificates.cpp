#include "pathline/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace pathline {

namespace {

using nlohmann::json;

json positions_object(const std::vector<int>& positions) {
  json object = json::object();
  for (size_t v = 0; v < positions.size(); ++v) {
    object[std::to_string(v)] = positions[v];
  }
  return object;
}

std::vector<int> positions_from_object(const json& object, int n) {
  std::vector<int> positions(n, 0);
  for (int v = 0; v < n; ++v) {
    positions[v] = object.at(std::to_string(v)).get<int>();
  }
  return positions;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& edge : j.at("edges")) {
    edges.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
  }
  return Graph(n, edges);
}

json decomposition_certificate(const Graph& g, const PathDecomposition& pd,
                               const DecompositionMetrics& m) {
  return json{{"bags", pd.bags},
              {"breadth", m.breadth},
              {"centers", m.centers},
              {"graph", graph_to_json(g)},
              {"length", m.length}};
}

json layout_certificate(const Graph& g, const Layout& layout) {
  return json{{"bandwidth", layout.bandwidth},
              {"graph", graph_to_json(g)},
              {"positions", layout.positions}};
}

json embedding_certificate(const Graph& g, const LineEmbedding& f) {
  return json{{"distortion", f.distortion},
              {"graph", graph_to_json(g)},
              {"positions", positions_object(f.positions)}};
}

json dominating_path_certificate(const Graph& g, const DominatingPath& p) {
  return json{{"graph", graph_to_json(g)}, {"k", p.radius},
              {"path", p.vertices}};
}

json dominating_pair_certificate(const Graph& g, const DominatingPair& p) {
  return json{{"graph", graph_to_json(g)},
              {"k", p.radius},
              {"pair", {p.x, p.y}}};
}

VerifyResult verify_decomposition_certificate(const json& j) {
  Graph g = graph_from_json(j.at("graph"));
  PathDecomposition pd;
  pd.bags = j.at("bags").get<std::vector<std::vector<int>>>();
  for (auto& bag : pd.bags) std::sort(bag.begin(), bag.end());

  auto valid = validate(g, pd);
  if (!valid) return {false, valid.violation};

  auto dist = all_pairs_distances(g);
  auto m = metrics(g, pd, dist);
  if (j.contains("length") && j.at("length").get<int>() != m.length) {
    return {false, "claimed length " + j.at("length").dump() +
                       " but actual length is " + std::to_string(m.length)};
  }
  if (j.contains("breadth") && j.at("breadth").get<int>() != m.breadth) {
    return {false, "claimed breadth " + j.at("breadth").dump() +
                       " but actual breadth is " + std::to_string(m.breadth)};
  }
  if (j.contains("centers")) {
    auto centers = j.at("centers").get<std::vector<int>>();
    if (centers.size() != pd.bags.size()) {
      return {false, "centers count does not match bag count"};
    }
    int breadth = j.contains("breadth") ? j.at("breadth").get<int>()
                                        : m.breadth;
    for (size_t i = 0; i < centers.size(); ++i) {
      if (centers[i] < 0 || centers[i] >= g.vertex_count()) {
        return {false, "center out of range: " + std::to_string(centers[i])};
      }
      for (int u : pd.bags[i]) {
        if (dist(centers[i], u) > breadth) {
          return {false, "center " + std::to_string(centers[i]) +
                             " does not cover vertex " + std::to_string(u) +
                             " of bag " + std::to_string(i) +
                             " within radius " + std::to_string(breadth)};
        }
      }
    }
  }
  return {};
}

VerifyResult verify_layout_certificate(const json& j) {
  Graph g = graph_from_json(j.at("graph"));
  auto positions = j.at("positions").get<std::vector<int>>();
  int bandwidth = 0;
  try {
    bandwidth = layout_bandwidth(g, positions);
  } catch (const std::invalid_argument& error) {
    return {false, error.what()};
  }
  if (j.contains("bandwidth") && j.at("bandwidth").get<int>() != bandwidth) {
    return {false, "claimed bandwidth " + j.at("bandwidth").dump() +
                       " but actual bandwidth is " + std::to_string(bandwidth)};
  }
  return {};
}

VerifyResult verify_embedding_certificate(const json& j) {
  Graph g = graph_from_json(j.at("graph"));
  auto positions = positions_from_object(j.at("positions"), g.vertex_count());

  auto dist = all_pairs_distances(g);
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (std::abs(positions[u] - positions[v]) < dist(u, v)) {
        return {false, "embedding contracts pair (" + std::to_string(u) +
                           ", " + std::to_string(v) + ")"};
      }
    }
  }
  int distortion = 0;
  for (const auto& [u, v] : g.edges()) {
    distortion = std::max(distortion, std::abs(positions[u] - positions[v]));
  }
  if (j.contains("distortion") && j.at("distortion").get<int>() != distortion) {
    return {false, "claimed distortion " + j.at("distortion").dump() +
                       " but actual distortion is " +
                       std::to_string(distortion)};
  }
  return {};
}

}  // namespace pathline
