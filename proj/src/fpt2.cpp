#include <algorithm>
#include <limits>
#include <thread>

#include "clustree/exact.hpp"

namespace clustree {

namespace {

struct Candidate {
  Vertex root = 0;
  std::vector<Arc> tree_arcs;  // parent -> child arcs of the cluster's shortest-path tree
  std::vector<Vertex> tails;   // parent of each arc, same order
};

struct Best {
  Cost cost = kInfinity;
  std::int64_t index = -1;
  std::int64_t spanning = 0;

  void offer(Cost c, std::int64_t i) {
    if (c < cost || (c == cost && i < index)) {
      cost = c;
      index = i;
    }
  }
};

class RootEnumerator {
 public:
  RootEnumerator(const ClusteredGraph& g, bool full_roots) : g_(g) {
    const auto roots = fpt2_candidate_roots(g, full_roots);
    candidates_.resize(roots.size());
    for (std::size_t c = 0; c < roots.size(); ++c) {
      for (Vertex r : roots[c]) {
        Candidate cand;
        cand.root = r;
        const PathTree t = g.cluster_tree(static_cast<int>(c), r);
        for (Vertex u : g.cluster(static_cast<int>(c))) {
          if (u == r) continue;
          const Vertex p = t.parent[static_cast<std::size_t>(u)];
          const int e = t.parent_edge[static_cast<std::size_t>(u)];
          cand.tree_arcs.push_back({u, e, g.edge(e).w});
          cand.tails.push_back(p);
        }
        candidates_[c].push_back(std::move(cand));
      }
    }
    for (int id = 0; id < g.m(); ++id)
      if (!g.is_intra(id)) cross_.push_back(id);
  }

  std::int64_t count() const {
    std::int64_t total = 1;
    for (const auto& list : candidates_) {
      const auto size = static_cast<std::int64_t>(list.size());
      if (size == 0) return 0;
      if (total > std::numeric_limits<std::int64_t>::max() / size) return std::numeric_limits<std::int64_t>::max();
      total *= size;
    }
    return total;
  }

  /// Mixed-radix decoding with cluster 0 most significant, so increasing
  /// indices enumerate root vectors in lexicographic order.
  void decode(std::int64_t index, std::vector<int>& choice) const {
    choice.resize(candidates_.size());
    for (std::size_t c = candidates_.size(); c-- > 0;) {
      const auto size = static_cast<std::int64_t>(candidates_[c].size());
      choice[c] = static_cast<int>(index % size);
      index /= size;
    }
  }

  /// Shortest-path tree of the auxiliary digraph for one root vector.
  PathTree evaluate(const std::vector<int>& choice, Adjacency& aux, std::vector<char>& is_root) const {
    for (auto& list : aux) list.clear();
    std::fill(is_root.begin(), is_root.end(), 0);
    for (std::size_t c = 0; c < candidates_.size(); ++c)
      is_root[static_cast<std::size_t>(candidates_[c][static_cast<std::size_t>(choice[c])].root)] = 1;
    // Inter-cluster edges survive only towards a root; edges between two
    // roots become two opposite arcs.
    for (int id : cross_) {
      const Edge& e = g_.edge(id);
      if (is_root[static_cast<std::size_t>(e.v)]) aux[static_cast<std::size_t>(e.u)].push_back({e.v, id, e.w});
      if (is_root[static_cast<std::size_t>(e.u)]) aux[static_cast<std::size_t>(e.v)].push_back({e.u, id, e.w});
    }
    // Intra-cluster edges are replaced by the cluster tree hanging from its root.
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      const Candidate& cand = candidates_[c][static_cast<std::size_t>(choice[c])];
      for (std::size_t a = 0; a < cand.tree_arcs.size(); ++a)
        aux[static_cast<std::size_t>(cand.tails[a])].push_back(cand.tree_arcs[a]);
    }
    return shortest_path_tree(aux, g_.source(), g_.metric());
  }

  Best scan(std::int64_t begin, std::int64_t end) const {
    Adjacency aux(static_cast<std::size_t>(g_.n()));
    std::vector<char> is_root(static_cast<std::size_t>(g_.n()));
    std::vector<int> choice;
    Best best;
    for (std::int64_t i = begin; i < end; ++i) {
      decode(i, choice);
      const PathTree t = evaluate(choice, aux, is_root);
      if (!t.spans()) continue;
      ++best.spanning;
      best.offer(t.total(), i);
    }
    return best;
  }

  Vertex root_of(std::size_t cluster, int choice) const {
    return candidates_[cluster][static_cast<std::size_t>(choice)].root;
  }

 private:
  const ClusteredGraph& g_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<int> cross_;
};

}  // namespace

std::vector<std::vector<Vertex>> fpt2_candidate_roots(const ClusteredGraph& g, bool full_roots) {
  std::vector<std::vector<Vertex>> roots(static_cast<std::size_t>(g.k()));
  for (int c = 0; c < g.k(); ++c) {
    auto& list = roots[static_cast<std::size_t>(c)];
    if (c == g.source_cluster()) {
      list.push_back(g.source());
      continue;
    }
    for (Vertex v : g.cluster(c))
      if (full_roots || g.is_boundary(v)) list.push_back(v);
    std::sort(list.begin(), list.end());
  }
  return roots;
}

std::int64_t fpt2_vector_count(const ClusteredGraph& g, bool full_roots) {
  std::int64_t total = 1;
  for (const auto& list : fpt2_candidate_roots(g, full_roots)) {
    const auto size = static_cast<std::int64_t>(list.size());
    if (size == 0) return 0;
    if (total > std::numeric_limits<std::int64_t>::max() / size) return std::numeric_limits<std::int64_t>::max();
    total *= size;
  }
  return total;
}

Fpt2Result fpt2_solve(const ClusteredGraph& g, Problem problem, const Fpt2Options& options) {
  if (problem == Problem::CluBFS && g.weighted()) throw InvalidInput("clubfs requires an unweighted instance");
  if (!g.clusters_connected()) throw InfeasibleInstance("some cluster is disconnected");

  const RootEnumerator roots(g, options.full_roots);
  const std::int64_t total = roots.count();
  if (total == 0) throw InfeasibleInstance("a cluster has no candidate root");
  if (total > options.max_vectors)
    throw BudgetExceeded("fpt2 root-vector count " + std::to_string(total) + " exceeds budget");

  const int threads = static_cast<int>(std::clamp<std::int64_t>(options.threads, 1, total));
  std::vector<Best> partial(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t begin = total * t / threads;
      const std::int64_t end = total * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] { partial[static_cast<std::size_t>(t)] = roots.scan(begin, end); });
    }
  }
  Best best;
  std::int64_t spanning = 0;
  for (const Best& b : partial) {
    spanning += b.spanning;
    if (b.index >= 0) best.offer(b.cost, b.index);
  }
  if (best.index < 0) throw InfeasibleInstance("no root vector reaches every vertex");

  std::vector<int> choice;
  roots.decode(best.index, choice);
  Adjacency aux(static_cast<std::size_t>(g.n()));
  std::vector<char> is_root(static_cast<std::size_t>(g.n()));
  const PathTree t = roots.evaluate(choice, aux, is_root);

  std::vector<int> edges;
  for (Vertex v = 0; v < g.n(); ++v)
    if (v != g.source()) edges.push_back(t.parent_edge[static_cast<std::size_t>(v)]);

  Fpt2Result result;
  result.tree = make_tree_solution(g, std::move(edges));
  result.opt = best.cost;
  result.vectors = total;
  result.spanning_vectors = spanning;
  for (std::size_t c = 0; c < choice.size(); ++c) result.roots.push_back(roots.root_of(c, choice[c]));
  if (result.tree.cost != result.opt || !result.tree.feasible)
    throw std::logic_error("fpt2 tree does not match its auxiliary-graph cost");
  return result;
}

}  // namespace clustree
