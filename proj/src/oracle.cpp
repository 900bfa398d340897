#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "clustree/exact.hpp"

namespace clustree {

std::int64_t binomial(std::int64_t m, std::int64_t r) {
  if (r < 0 || r > m) return 0;
  r = std::min(r, m - r);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * (m - r + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

// Union-find with an undo log, so the recursion can retract a choice.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] > size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;
    size_[static_cast<std::size_t>(b)] += size_[static_cast<std::size_t>(a)];
    log_.push_back(a);
    return true;
  }
  void undo() {
    const int a = log_.back();
    log_.pop_back();
    const int b = parent_[static_cast<std::size_t>(a)];
    size_[static_cast<std::size_t>(b)] -= size_[static_cast<std::size_t>(a)];
    parent_[static_cast<std::size_t>(a)] = a;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> log_;
};

}  // namespace

OracleResult oracle_spanning_trees(const ClusteredGraph& g, std::int64_t budget) {
  const int n = g.n();
  const int m = g.m();
  if (binomial(m, n - 1) > budget)
    throw BudgetExceeded("instance too large for oracle: C(" + std::to_string(m) + ", " +
                         std::to_string(n - 1) + ") exceeds " + std::to_string(budget));

  OracleResult result;
  std::vector<int> chosen;
  std::vector<int> best_edges;
  RollbackDsu dsu(n);

  auto evaluate = [&] {
    ++result.trees_examined;
    // A forest of n-1 edges on n vertices is a spanning tree; it is
    // cluster-feasible iff each cluster keeps |V_i| - 1 internal edges.
    std::vector<int> internal(static_cast<std::size_t>(g.k()), 0);
    for (int id : chosen)
      if (g.is_intra(id)) ++internal[static_cast<std::size_t>(g.cluster_of(g.edge(id).u))];
    for (int c = 0; c < g.k(); ++c)
      if (internal[static_cast<std::size_t>(c)] != g.cluster_size(c) - 1) return;

    std::vector<std::vector<std::pair<Vertex, Weight>>> tree(static_cast<std::size_t>(n));
    Weight weight = 0;
    for (int id : chosen) {
      weight += g.edge(id).w;
      const Edge& e = g.edge(id);
      tree[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
      tree[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
    }
    Cost cost = 0;
    std::vector<Vertex> stack{g.source()};
    std::vector<Cost> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(g.source())] = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      cost += dist[static_cast<std::size_t>(u)];
      for (auto [v, w] : tree[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
          stack.push_back(v);
        }
    }
    result.min_weight = std::min(result.min_weight, weight);
    if (cost < result.opt) {
      result.opt = cost;
      best_edges = chosen;
    }
  };

  // Edge subsets in lexicographic order; subsets closing a cycle are skipped
  // as soon as the cycle appears since they cannot be spanning trees.
  std::function<void(int)> extend = [&](int next) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      evaluate();
      return;
    }
    for (int id = next; id <= m - (n - 1 - static_cast<int>(chosen.size())); ++id) {
      const Edge& e = g.edge(id);
      if (!dsu.unite(e.u, e.v)) continue;
      chosen.push_back(id);
      extend(id + 1);
      chosen.pop_back();
      dsu.undo();
    }
  };
  extend(0);

  if (result.opt < kInfinity) {
    result.feasible = true;
    result.tree = make_tree_solution(g, best_edges);
  }
  return result;
}

bool is_clustered_path(const ClusteredGraph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen_vertex(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> closed(static_cast<std::size_t>(g.k()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.n() || seen_vertex[static_cast<std::size_t>(v)]) return false;
    seen_vertex[static_cast<std::size_t>(v)] = 1;
    if (i == 0) continue;
    const Vertex u = path[i - 1];
    if (g.find_edge(u, v) < 0) return false;
    const int cu = g.cluster_of(u);
    const int cv = g.cluster_of(v);
    if (cu != cv) {
      if (closed[static_cast<std::size_t>(cv)]) return false;
      closed[static_cast<std::size_t>(cu)] = 1;
    }
  }
  return true;
}

ClusteredPath clusp_oracle_paths(const ClusteredGraph& g, Vertex s, Vertex t, int max_vertices) {
  if (g.n() > max_vertices)
    throw BudgetExceeded("path oracle limited to " + std::to_string(max_vertices) + " vertices");
  if (s < 0 || s >= g.n() || t < 0 || t >= g.n()) throw InvalidInput("endpoint out of range");

  ClusteredPath best;
  std::vector<Vertex> path{s};
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
  on_path[static_cast<std::size_t>(s)] = 1;

  std::function<void(Cost)> walk = [&](Cost length) {
    const Vertex u = path.back();
    if (u == t) {
      if (length < best.length && is_clustered_path(g, path)) {
        best.length = length;
        best.vertices = path;
      }
      return;
    }
    for (const Arc& a : g.neighbors(u)) {
      if (on_path[static_cast<std::size_t>(a.to)]) continue;
      on_path[static_cast<std::size_t>(a.to)] = 1;
      path.push_back(a.to);
      walk(length + (g.weighted() ? a.w : 1));
      path.pop_back();
      on_path[static_cast<std::size_t>(a.to)] = 0;
    }
  };
  walk(0);
  return best;
}

}  // namespace clustree
