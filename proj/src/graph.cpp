#include "clustree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>
#include <utility>

namespace clustree {

namespace {

bool allowed_at(std::span<const char> allowed, Vertex v) {
  return allowed.empty() || allowed[static_cast<std::size_t>(v)] != 0;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

bool PathTree::spans(std::span<const char> allowed) const {
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (allowed_at(allowed, static_cast<Vertex>(v)) && dist[v] >= kInfinity) return false;
  return true;
}

Cost PathTree::total() const {
  Cost sum = 0;
  for (Cost d : dist)
    if (d < kInfinity) sum = sat_add(sum, d);
  return sum;
}

PathTree shortest_path_tree(const Adjacency& adj, Vertex root, Metric metric,
                            std::span<const char> allowed) {
  const std::size_t n = adj.size();
  PathTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.dist.assign(n, kInfinity);
  if (root < 0 || static_cast<std::size_t>(root) >= n || !allowed_at(allowed, root)) return t;

  const auto r = static_cast<std::size_t>(root);
  t.dist[r] = 0;
  t.parent[r] = root;

  // A candidate (u, edge) replaces the current parent of v on a tie only
  // when it is lexicographically smaller.
  auto offer = [&](Vertex u, const Arc& a, Cost nd) {
    const auto v = static_cast<std::size_t>(a.to);
    if (nd < t.dist[v]) {
      t.dist[v] = nd;
      t.parent[v] = u;
      t.parent_edge[v] = a.edge;
      return true;
    }
    if (nd == t.dist[v] && std::pair(u, a.edge) < std::pair(t.parent[v], t.parent_edge[v])) {
      t.parent[v] = u;
      t.parent_edge[v] = a.edge;
    }
    return false;
  };

  if (metric == Metric::Hops) {
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      const Cost nd = t.dist[static_cast<std::size_t>(u)] + 1;
      for (const Arc& a : adj[static_cast<std::size_t>(u)]) {
        if (!allowed_at(allowed, a.to) || a.to == root) continue;
        if (offer(u, a, nd)) queue.push(a.to);
      }
    }
    return t;
  }

  std::vector<char> settled(n, 0);
  using Item = std::pair<Cost, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, root);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    auto& done = settled[static_cast<std::size_t>(u)];
    if (done || d != t.dist[static_cast<std::size_t>(u)]) continue;
    done = 1;
    for (const Arc& a : adj[static_cast<std::size_t>(u)]) {
      if (!allowed_at(allowed, a.to) || settled[static_cast<std::size_t>(a.to)]) continue;
      if (offer(u, a, sat_add(d, a.w))) heap.emplace(t.dist[static_cast<std::size_t>(a.to)], a.to);
    }
  }
  return t;
}

SpanningForest minimum_spanning_tree(int num_vertices, std::span<const WeightedEdge> edges) {
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return edges[static_cast<std::size_t>(a)].w < edges[static_cast<std::size_t>(b)].w;
  });
  Dsu dsu(num_vertices);
  SpanningForest forest;
  for (int i : order) {
    const auto& e = edges[static_cast<std::size_t>(i)];
    if (dsu.unite(e.u, e.v)) {
      forest.edges.push_back(i);
      forest.weight += e.w;
    }
  }
  if (static_cast<int>(forest.edges.size()) != std::max(num_vertices - 1, 0)) throw GraphDisconnected();
  std::sort(forest.edges.begin(), forest.edges.end());
  return forest;
}

ClusteredGraph::ClusteredGraph(ClusteredInstance inst) : inst_(std::move(inst)) {
  require_structurally_valid(inst_);
  const auto n = static_cast<std::size_t>(inst_.n);
  adj_.assign(n, {});
  for (int id = 0; id < inst_.num_edges(); ++id) {
    const Edge& e = inst_.edges[static_cast<std::size_t>(id)];
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id, e.w});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id, e.w});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [](const Arc& a, const Arc& b) { return std::pair(a.to, a.edge) < std::pair(b.to, b.edge); });

  cluster_of_ = cluster_membership(inst_);
  masks_.assign(static_cast<std::size_t>(k()), std::vector<char>(n, 0));
  for (int i = 0; i < k(); ++i)
    for (Vertex v : cluster(i)) masks_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 1;
  boundary_.assign(n, 0);
  for (const Edge& e : inst_.edges) {
    if (cluster_of(e.u) == cluster_of(e.v)) continue;
    boundary_[static_cast<std::size_t>(e.u)] = 1;
    boundary_[static_cast<std::size_t>(e.v)] = 1;
  }
}

int ClusteredGraph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return -1;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Arc& a, Vertex x) { return a.to < x; });
  return (it != list.end() && it->to == v) ? it->edge : -1;
}

PathTree ClusteredGraph::cluster_tree(int cluster, Vertex root) const {
  return shortest_path_tree(adj_, root, metric(), cluster_mask(cluster));
}

bool ClusteredGraph::clusters_connected() const {
  for (int i = 0; i < k(); ++i)
    if (!cluster_tree(i, cluster(i).front()).spans(cluster_mask(i))) return false;
  return true;
}

Cost gamma(const ClusteredGraph& g) {
  Cost best = 0;
  for (int i = 0; i < g.k(); ++i) {
    for (Vertex v : g.cluster(i)) {
      const PathTree t = g.cluster_tree(i, v);
      for (Vertex u : g.cluster(i)) {
        const Cost d = t.dist[static_cast<std::size_t>(u)];
        if (d >= kInfinity) throw InfeasibleInstance("cluster " + std::to_string(i) + " is disconnected");
        best = std::max(best, d);
      }
    }
  }
  return best;
}

QuotientGraph contract_clusters(const ClusteredGraph& g) {
  QuotientGraph q;
  q.k = g.k();
  q.adjacency.assign(static_cast<std::size_t>(q.k), {});
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    const int a = g.cluster_of(e.u);
    const int b = g.cluster_of(e.v);
    if (a == b) continue;
    const int qid = static_cast<int>(q.edges.size());
    q.edges.push_back({a, b, id});
    q.adjacency[static_cast<std::size_t>(a)].push_back({b, qid, e.w});
    q.adjacency[static_cast<std::size_t>(b)].push_back({a, qid, e.w});
  }
  for (auto& list : q.adjacency)
    std::sort(list.begin(), list.end(),
              [](const Arc& a, const Arc& b) { return std::pair(a.to, a.edge) < std::pair(b.to, b.edge); });
  return q;
}

SpanningTreeSolution make_tree_solution(const ClusteredGraph& g, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  if (static_cast<int>(edge_ids.size()) != g.n() - 1 ||
      std::adjacent_find(edge_ids.begin(), edge_ids.end()) != edge_ids.end())
    throw InvalidInput("edge set is not a spanning tree: expected " + std::to_string(g.n() - 1) +
                       " distinct edges, got " + std::to_string(edge_ids.size()));
  Adjacency tree(static_cast<std::size_t>(g.n()));
  for (int id : edge_ids) {
    if (id < 0 || id >= g.m()) throw InvalidInput("edge id out of range: " + std::to_string(id));
    const Edge& e = g.edge(id);
    tree[static_cast<std::size_t>(e.u)].push_back({e.v, id, e.w});
    tree[static_cast<std::size_t>(e.v)].push_back({e.u, id, e.w});
  }
  const PathTree t = shortest_path_tree(tree, g.source(), Metric::Weighted);
  if (!t.spans()) throw InvalidInput("edge set is not a spanning tree: graph not connected");

  SpanningTreeSolution sol;
  sol.parent = t.parent;
  sol.dist = t.dist;
  sol.edges = std::move(edge_ids);
  sol.cost = t.total();
  sol.feasible = is_feasible_tree(g, sol);
  return sol;
}

namespace {

// Distances along the parent mapping; throws on anything but a spanning
// tree of g rooted at the source.
std::vector<Cost> tree_distances(const ClusteredGraph& g, const SpanningTreeSolution& tree) {
  const auto n = static_cast<std::size_t>(g.n());
  if (tree.parent.size() != n) throw InvalidInput("tree does not span the vertex set");
  if (tree.parent[static_cast<std::size_t>(g.source())] != g.source())
    throw InvalidInput("tree is not rooted at the source");
  std::vector<Cost> dist(n, -1);
  std::vector<char> on_stack(n, 0);
  dist[static_cast<std::size_t>(g.source())] = 0;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    Vertex v = static_cast<Vertex>(start);
    while (dist[static_cast<std::size_t>(v)] < 0) {
      if (on_stack[static_cast<std::size_t>(v)]) throw InvalidInput("parent mapping contains a cycle");
      on_stack[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
      const Vertex p = tree.parent[static_cast<std::size_t>(v)];
      if (p < 0 || p >= g.n() || g.find_edge(p, v) < 0)
        throw InvalidInput("vertex " + std::to_string(v) + " has no tree edge to its parent");
      v = p;
    }
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const Vertex p = tree.parent[static_cast<std::size_t>(u)];
      dist[static_cast<std::size_t>(u)] =
          sat_add(dist[static_cast<std::size_t>(p)], g.edge(g.find_edge(p, u)).w);
    }
  }
  return dist;
}

}  // namespace

Cost broadcast_cost(const ClusteredGraph& g, const SpanningTreeSolution& tree) {
  Cost sum = 0;
  for (Cost d : tree_distances(g, tree)) sum = sat_add(sum, d);
  return sum;
}

bool is_feasible_tree(const ClusteredGraph& g, const SpanningTreeSolution& tree) {
  (void)tree_distances(g, tree);
  std::vector<int> intra(static_cast<std::size_t>(g.k()), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == g.source()) continue;
    const Vertex p = tree.parent[static_cast<std::size_t>(v)];
    if (g.cluster_of(p) == g.cluster_of(v)) ++intra[static_cast<std::size_t>(g.cluster_of(v))];
  }
  // A subforest of a tree on c vertices is connected iff it has c - 1 edges.
  for (int i = 0; i < g.k(); ++i)
    if (intra[static_cast<std::size_t>(i)] != g.cluster_size(i) - 1) return false;
  return true;
}

Weight tree_weight(const ClusteredGraph& g, const SpanningTreeSolution& tree) {
  Weight w = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == g.source()) continue;
    const int id = g.find_edge(tree.parent[static_cast<std::size_t>(v)], v);
    if (id < 0) throw InvalidInput("vertex " + std::to_string(v) + " has no tree edge to its parent");
    w += g.edge(id).w;
  }
  return w;
}

}  // namespace clustree
