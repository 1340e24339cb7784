#include "pathline/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pathline {

namespace {

bool bag_contains(const std::vector<int>& bag, int v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

}  // namespace

ValidationResult validate(const Graph& g, const PathDecomposition& pd) {
  int n = g.vertex_count();
  for (const auto& bag : pd.bags) {
    if (bag.empty()) return {false, "empty bag"};
    for (int v : bag) {
      if (v < 0 || v >= n) {
        return {false, "bag vertex out of range: " + std::to_string(v)};
      }
    }
  }

  // Property 3 first: contiguity gives cheap first/last indexes that the
  // other checks reuse.
  std::vector<int> first(n, -1), last(n, -1);
  for (size_t i = 0; i < pd.bags.size(); ++i) {
    for (int v : pd.bags[i]) {
      if (first[v] < 0) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (first[v] < 0) {
      return {false, "property 1 violated: vertex " + std::to_string(v) +
                         " is in no bag"};
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int i = first[v]; i <= last[v]; ++i) {
      if (!bag_contains(pd.bags[i], v)) {
        return {false, "property 3 violated: vertex " + std::to_string(v) +
                           " missing from bag " + std::to_string(i) +
                           " between its occurrences"};
      }
    }
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = std::max(first[u], first[v]) <= std::min(last[u], last[v]);
    if (!covered) {
      return {false, "property 2 violated: edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") is in no bag"};
    }
  }
  return {};
}

DecompositionMetrics metrics(const Graph& g, const PathDecomposition& pd,
                             const DistanceMatrix& dist) {
  auto valid = validate(g, pd);
  if (!valid) {
    throw std::invalid_argument("invalid path-decomposition: " +
                                valid.violation);
  }
  DecompositionMetrics result;
  int n = g.vertex_count();
  std::vector<int> bag_radius(pd.bags.size());
  for (size_t i = 0; i < pd.bags.size(); ++i) {
    const auto& bag = pd.bags[i];
    for (int u : bag) {
      for (int v : bag) {
        result.length = std::max(result.length, dist(u, v));
      }
    }
    int radius = std::numeric_limits<int>::max();
    for (int c = 0; c < n; ++c) {
      int reach = 0;
      for (int u : bag) reach = std::max(reach, dist(c, u));
      radius = std::min(radius, reach);
    }
    bag_radius[i] = radius;
    result.breadth = std::max(result.breadth, radius);
  }
  result.centers.resize(pd.bags.size());
  for (size_t i = 0; i < pd.bags.size(); ++i) {
    for (int c = 0; c < n; ++c) {
      int reach = 0;
      for (int u : pd.bags[i]) reach = std::max(reach, dist(c, u));
      if (reach <= result.breadth) {
        result.centers[i] = c;  // smallest id wins
        break;
      }
    }
  }
  return result;
}

PathDecomposition extended_layering(const Graph& g, int start) {
  auto layering = bfs_layering(g, start);
  PathDecomposition pd;
  pd.bags.reserve(layering.layers.size() - 1);
  for (size_t i = 1; i < layering.layers.size(); ++i) {
    std::vector<int> bag = layering.layers[i];
    for (int v : layering.layers[i - 1]) {
      bool has_next = false;
      for (int w : g.neighbors(v)) {
        if (std::binary_search(layering.layers[i].begin(),
                               layering.layers[i].end(), w)) {
          has_next = true;
          break;
        }
      }
      if (has_next) bag.push_back(v);
    }
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

PathDecomposition extended_layering_best(const Graph& g) {
  DistanceMatrix dist(g);
  PathDecomposition best;
  int best_length = std::numeric_limits<int>::max();
  for (int s = 0; s < g.vertex_count(); ++s) {
    auto pd = extended_layering(g, s);
    int length = 0;
    for (const auto& bag : pd.bags) {
      for (int u : bag) {
        for (int v : bag) length = std::max(length, dist(u, v));
      }
    }
    if (length < best_length) {
      best_length = length;
      best = std::move(pd);
    }
  }
  return best;
}

PathDecomposition decomposition_from_embedding(const Graph& g,
                                               const LineEmbedding& f,
                                               int k) {
  int n = g.vertex_count();
  if (static_cast<int>(f.positions.size()) != n) {
    throw std::invalid_argument("embedding size does not match graph");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return f.positions[a] < f.positions[b];
  });
  DistanceMatrix dist(g);
  for (int i = 0; i + 1 < n; ++i) {
    int a = order[i], b = order[i + 1];
    if (f.positions[b] - f.positions[a] < dist(a, b)) {
      throw std::invalid_argument(
          "embedding is contractive on consecutive pair (" +
          std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }

  // Canonicalize: same order, consecutive spacing = exact distance.
  std::vector<int> pos(n);
  pos[order[0]] = 0;
  for (int i = 1; i < n; ++i) {
    pos[order[i]] = pos[order[i - 1]] + dist(order[i - 1], order[i]);
  }
  for (const auto& [u, v] : g.edges()) {
    if (std::abs(pos[u] - pos[v]) > k) {
      throw std::invalid_argument("embedding distortion exceeds k = " +
                                  std::to_string(k));
    }
  }

  PathDecomposition pd;
  pd.bags.reserve(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> bag;
    for (int j = i; j < n && pos[order[j]] <= pos[v] + k; ++j) {
      bag.push_back(order[j]);
    }
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

Graph interval_completion(const Graph& g, const PathDecomposition& pd) {
  auto valid = validate(g, pd);
  if (!valid) {
    throw std::invalid_argument("invalid path-decomposition: " +
                                valid.violation);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& bag : pd.bags) {
    for (size_t i = 0; i < bag.size(); ++i) {
      for (size_t j = i + 1; j < bag.size(); ++j) {
        edges.emplace_back(bag[i], bag[j]);
      }
    }
  }
  return Graph(g.vertex_count(), edges);
}

PathDecomposition prune_nested_bags(PathDecomposition pd) {
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < pd.bags.size(); ++i) {
      bool nested =
          (i > 0 && subset(pd.bags[i], pd.bags[i - 1])) ||
          (i + 1 < pd.bags.size() && subset(pd.bags[i], pd.bags[i + 1]));
      if (nested && pd.bags.size() > 1) {
        pd.bags.erase(pd.bags.begin() + static_cast<ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pd;
}

}  // namespace pathline
