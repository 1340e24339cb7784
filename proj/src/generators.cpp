#include "pathline/generators.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pathline {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Reads the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_clique(int n) {
  require(n >= 2, "clique needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph make_path(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph make_caterpillar(int spine, int hair) {
  require(spine >= 1 && hair >= 0, "caterpillar needs spine >= 1, hair >= 0");
  require(spine + spine * hair >= 2, "caterpillar too small");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    int anchor = i;
    for (int j = 0; j < hair; ++j) {
      edges.emplace_back(anchor, next);
      anchor = next++;
    }
  }
  return Graph(spine + spine * hair, edges);
}

Graph make_complement_cycle(int n) {
  require(n >= 5, "complement of a cycle is connected only for n >= 5");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool cycle_edge = (j - i == 1) || (i == 0 && j == n - 1);
      if (!cycle_edge) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph random_connected(int n, double edge_probability, std::uint64_t seed) {
  require(n >= 2, "random graph needs n >= 2");
  require(edge_probability > 0.0 && edge_probability <= 1.0,
          "edge probability must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    try {
      return Graph(n, edges);
    } catch (const std::invalid_argument&) {
      // disconnected draw, resample
    }
  }
  throw std::invalid_argument(
      "could not draw a connected graph within the attempt budget (n=" +
      std::to_string(n) + ", p=" + std::to_string(edge_probability) + ")");
}

std::vector<int> random_permutation_model(int n, std::uint64_t seed) {
  require(n >= 2, "permutation model needs n >= 2");
  std::vector<int> model(n);
  std::iota(model.begin(), model.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(model.begin(), model.end(), rng);
  return model;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cycle:
      return make_cycle(spec.n);
    case FamilyKind::clique:
      return make_clique(spec.n);
    case FamilyKind::path:
      return make_path(spec.n);
    case FamilyKind::star:
      return make_star(spec.leaves);
    case FamilyKind::caterpillar:
      return make_caterpillar(spec.spine, spec.hair);
    case FamilyKind::random_connected:
      return random_connected(spec.n, spec.edge_probability, spec.seed);
    case FamilyKind::complement_cycle:
      return make_complement_cycle(spec.n);
  }
  throw std::invalid_argument("unknown family kind");
}

Graph parse_graph(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw std::invalid_argument("graph input is empty");
  }
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m)) {
    throw std::invalid_argument("malformed header line: '" + line + "'");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line)) {
      throw std::invalid_argument("expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    }
    std::istringstream edge_line(line);
    int u = 0, v = 0;
    if (!(edge_line >> u >> v)) {
      throw std::invalid_argument("malformed edge line: '" + line + "'");
    }
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  auto edges = g.edges();
  std::ostringstream out;
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> parse_permutation_model(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw std::invalid_argument("permutation model is empty");
  }
  std::istringstream values(line);
  std::vector<int> model;
  int value = 0;
  while (values >> value) model.push_back(value);
  if (model.empty()) {
    throw std::invalid_argument("permutation model is empty");
  }
  return model;
}

std::vector<Trapezoid> parse_trapezoid_model(std::istream& in) {
  std::vector<Trapezoid> model;
  std::string line;
  while (next_content_line(in, line)) {
    std::istringstream values(line);
    Trapezoid t;
    if (!(values >> t.upper_lo >> t.upper_hi >> t.lower_lo >> t.lower_hi)) {
      throw std::invalid_argument("malformed trapezoid line: '" + line + "'");
    }
    if (t.upper_lo > t.upper_hi || t.lower_lo > t.lower_hi) {
      throw std::invalid_argument("inverted interval in line: '" + line + "'");
    }
    model.push_back(t);
  }
  if (model.empty()) throw std::invalid_argument("trapezoid model is empty");
  return model;
}

std::pair<int, std::vector<std::pair<int, int>>> parse_convex_bipartite_model(
    std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw std::invalid_argument("convex bipartite model is empty");
  }
  std::istringstream header(line);
  int q = 0, p = 0;
  if (!(header >> q >> p)) {
    throw std::invalid_argument("malformed header line: '" + line + "'");
  }
  std::vector<std::pair<int, int>> intervals;
  intervals.reserve(p);
  for (int j = 0; j < p; ++j) {
    if (!next_content_line(in, line)) {
      throw std::invalid_argument("expected " + std::to_string(p) +
                                  " intervals, got " + std::to_string(j));
    }
    std::istringstream values(line);
    int lo = 0, hi = 0;
    if (!(values >> lo >> hi)) {
      throw std::invalid_argument("malformed interval line: '" + line + "'");
    }
    if (lo > hi) {
      throw std::invalid_argument("inverted interval in line: '" + line + "'");
    }
    intervals.emplace_back(lo, hi);
  }
  return {q, std::move(intervals)};
}

}  // namespace pathline
