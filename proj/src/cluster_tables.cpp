#include "clustree/exact.hpp"

#include <utility>

namespace clustree {

ClusterTables cluster_tables(const ClusteredGraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  ClusterTables t;
  t.n = g.n();
  t.tree_cost.assign(n, kInfinity);
  t.intra_dist.assign(n * n, kInfinity);
  t.ell.assign(n * n, kInfinity);
  t.ell_via.assign(n * n, -1);
  t.ell_edge.assign(n * n, -1);

  for (int c = 0; c < g.k(); ++c) {
    for (Vertex v : g.cluster(c)) {
      const PathTree tree = g.cluster_tree(c, v);
      Cost sum = 0;
      for (Vertex u : g.cluster(c)) {
        const Cost d = tree.dist[static_cast<std::size_t>(u)];
        if (d >= kInfinity) throw InfeasibleInstance("cluster " + std::to_string(c) + " is disconnected");
        t.intra_dist[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = d;
        sum += d;
      }
      t.tree_cost[static_cast<std::size_t>(v)] = sum;
    }
  }

  for (Vertex v = 0; v < g.n(); ++v) {
    const int c = g.cluster_of(v);
    for (Vertex x : g.cluster(c)) {
      const Cost dx = t.intra_dist[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(x)];
      for (const Arc& a : g.neighbors(x)) {
        const std::size_t slot = static_cast<std::size_t>(v) * n + static_cast<std::size_t>(a.to);
        const Cost cand = sat_add(dx, g.weighted() ? a.w : 1);
        const bool better = cand < t.ell[slot] ||
                            (cand == t.ell[slot] && std::pair(x, a.edge) < std::pair(t.ell_via[slot], t.ell_edge[slot]));
        if (better) {
          t.ell[slot] = cand;
          t.ell_via[slot] = x;
          t.ell_edge[slot] = a.edge;
        }
      }
    }
  }
  return t;
}

}  // namespace clustree
