#include "pathline/bandwidth.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pathline {

namespace {

void check_bijection(int n, std::span<const int> positions) {
  if (static_cast<int>(positions.size()) != n) {
    throw std::invalid_argument("positions size does not match graph");
  }
  std::vector<char> used(n + 1, 0);
  for (int p : positions) {
    if (p < 1 || p > n || used[p]) {
      throw std::invalid_argument(
          "positions are not a bijection onto {1.." + std::to_string(n) + "}");
    }
    used[p] = 1;
  }
}

// Depth-first search for a layout with bandwidth <= bound that honors a
// partial position assignment. Positions are filled left to right; at
// each free position candidate vertices are tried in ascending id order,
// so the first full layout found is deterministic.
class LayoutSearch {
 public:
  LayoutSearch(const Graph& g, int bound, const std::vector<int>& fixed_pos)
      : g_(g),
        n_(g.vertex_count()),
        bound_(bound),
        fixed_pos_(fixed_pos),
        fixed_at_(n_ + 1, -1),
        pos_(n_, 0),
        unplaced_nbrs_(n_) {
    for (int v = 0; v < n_; ++v) {
      unplaced_nbrs_[v] = g_.degree(v);
      if (fixed_pos_[v] > 0) fixed_at_[fixed_pos_[v]] = v;
    }
  }

  bool run() { return place(1); }

  const std::vector<int>& positions() const { return pos_; }

 private:
  bool admissible(int v, int p) const {
    for (int w : g_.neighbors(v)) {
      if (pos_[w] > 0) {
        if (p - pos_[w] > bound_) return false;
      } else if (fixed_pos_[w] > 0 && std::abs(fixed_pos_[w] - p) > bound_) {
        return false;
      }
    }
    return true;
  }

  // Every placed vertex with unplaced neighbors must still be able to
  // host them within its window: positions p+1 .. pos[u] + bound.
  bool deadlines_hold(int p) const {
    for (int u = 0; u < n_; ++u) {
      if (pos_[u] > 0 && unplaced_nbrs_[u] > 0 &&
          unplaced_nbrs_[u] > pos_[u] + bound_ - p) {
        return false;
      }
    }
    return true;
  }

  bool place(int p) {
    if (p > n_) return true;
    int forced = fixed_at_[p];
    for (int v = (forced >= 0 ? forced : 0); v < n_; ++v) {
      if (forced >= 0 && v != forced) break;
      if (pos_[v] > 0) continue;
      if (forced < 0 && fixed_pos_[v] > 0) continue;
      if (!admissible(v, p)) continue;
      pos_[v] = p;
      for (int w : g_.neighbors(v)) --unplaced_nbrs_[w];
      if (deadlines_hold(p) && place(p + 1)) return true;
      for (int w : g_.neighbors(v)) ++unplaced_nbrs_[w];
      pos_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int bound_;
  const std::vector<int>& fixed_pos_;
  std::vector<int> fixed_at_;
  std::vector<int> pos_;
  std::vector<int> unplaced_nbrs_;
};

bool feasible(const Graph& g, int bound, const std::vector<int>& fixed_pos) {
  return LayoutSearch(g, bound, fixed_pos).run();
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw std::invalid_argument(std::string(what) + ": graph has " +
                                std::to_string(g.vertex_count()) +
                                " vertices, cap is " + std::to_string(cap));
  }
}

}  // namespace

int layout_bandwidth(const Graph& g, std::span<const int> positions) {
  check_bijection(g.vertex_count(), positions);
  int bandwidth = 0;
  for (const auto& [u, v] : g.edges()) {
    bandwidth = std::max(bandwidth, std::abs(positions[u] - positions[v]));
  }
  return bandwidth;
}

Layout make_layout(const Graph& g, std::vector<int> positions) {
  int bandwidth = layout_bandwidth(g, positions);
  return Layout{std::move(positions), bandwidth};
}

int local_density_bound(const Graph& g, const DistanceMatrix& dist) {
  int n = g.vertex_count();
  int bound = 0;
  int diameter = dist.diameter();
  for (int v = 0; v < n; ++v) {
    std::vector<int> count(diameter + 1, 0);
    for (int u = 0; u < n; ++u) ++count[dist(v, u)];
    int inside = count[0];
    for (int r = 1; r <= diameter; ++r) {
      inside += count[r];
      bound = std::max(bound, (inside - 1 + 2 * r - 1) / (2 * r));
    }
  }
  return bound;
}

Layout layout_from_dominating_path(const Graph& g,
                                   const DominatingPath& path) {
  validate_dominating_path(g, path);
  auto branches = path_branch_sets(g, path.vertices);
  std::vector<int> positions(g.vertex_count(), 0);
  int next = 1;
  for (const auto& branch : branches) {
    for (int v : branch) positions[v] = next++;
  }
  return make_layout(g, std::move(positions));
}

int exact_bandwidth(const Graph& g, int cap) {
  check_cap(g, cap, "exact bandwidth");
  DistanceMatrix dist(g);
  std::vector<int> no_fixed(g.vertex_count(), 0);
  for (int b = local_density_bound(g, dist); ; ++b) {
    if (feasible(g, b, no_fixed)) return b;
  }
}

Layout exact_bandwidth_layout(const Graph& g, int cap) {
  int best = exact_bandwidth(g, cap);
  int n = g.vertex_count();
  // Fix positions vertex by vertex, smallest feasible position first;
  // the result is the lexicographically smallest optimal position vector.
  std::vector<int> fixed(n, 0);
  std::vector<char> used(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    for (int p = 1; p <= n; ++p) {
      if (used[p]) continue;
      fixed[v] = p;
      if (feasible(g, best, fixed)) {
        used[p] = 1;
        break;
      }
      fixed[v] = 0;
    }
  }
  return Layout{std::move(fixed), best};
}

Layout layout_from_decomposition(const Graph& g, const PathDecomposition& pd,
                                 int exact_cap) {
  Graph completion = interval_completion(g, pd);
  check_cap(completion, exact_cap, "decomposition bandwidth layout");
  Layout optimal = exact_bandwidth_layout(completion, exact_cap);
  return make_layout(g, std::move(optimal.positions));
}

}  // namespace pathline
