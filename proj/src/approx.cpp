#include "clustree/approx.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace clustree {

RatioCertificate ratio_bound(int n, int k, Cost gamma) {
  RatioCertificate c;
  c.gamma = gamma;
  c.n = n;
  c.k = k;
  if (gamma <= 0) {
    c.applicable = false;
    c.note = "2γ term = 0; bound vacuous";
    return c;
  }
  c.applicable = true;
  c.terms[0] = Rational(4LL * n * k, gamma);
  c.terms[1] = Rational(4LL * n * n, gamma * gamma);
  c.terms[2] = Rational(2 * gamma);
  c.rho = std::min({c.terms[0], c.terms[1], c.terms[2]});
  // Two half-paths hanging from the centre of a diametral path.
  c.lower_bound = gamma % 2 == 0 ? (gamma * gamma + 2 * gamma) / 4 : (gamma + 1) * (gamma + 1) / 4;
  return c;
}

RatioCertificate ratio_bound(const ClusteredGraph& g) { return ratio_bound(g.n(), g.k(), gamma(g)); }

namespace {

void append_cluster_tree(const ClusteredGraph& g, int cluster, Vertex root, std::vector<int>& out) {
  const PathTree t = g.cluster_tree(cluster, root);
  for (Vertex v : g.cluster(cluster)) {
    if (!t.reaches(v)) throw InfeasibleInstance("cluster " + std::to_string(cluster) + " is disconnected");
    if (v != root) out.push_back(t.parent_edge[static_cast<std::size_t>(v)]);
  }
}

}  // namespace

ApproxResult clubfs_approx(const ClusteredGraph& g) {
  if (g.weighted()) throw InvalidInput("approx requires unweighted instance");
  if (!g.clusters_connected()) throw InfeasibleInstance("some cluster is disconnected");

  const QuotientGraph q = contract_clusters(g);
  const int root_cluster = g.source_cluster();
  const PathTree qt = shortest_path_tree(q.adjacency, root_cluster, Metric::Hops);
  if (!qt.spans()) throw InfeasibleInstance("quotient graph disconnected");

  // Lexicographically smallest original edge per cluster pair.
  std::map<std::pair<int, int>, int> smallest;
  for (const QuotientEdge& e : q.edges) {
    const auto key = std::minmax(e.a, e.b);
    auto [it, inserted] = smallest.emplace(key, e.provenance);
    if (inserted) continue;
    const Edge& cur = g.edge(it->second);
    const Edge& cand = g.edge(e.provenance);
    if (std::minmax(cand.u, cand.v) < std::minmax(cur.u, cur.v)) it->second = e.provenance;
  }

  std::vector<int> edges;
  append_cluster_tree(g, root_cluster, g.source(), edges);
  for (int j = 0; j < g.k(); ++j) {
    if (j == root_cluster) continue;
    const int i = qt.parent[static_cast<std::size_t>(j)];
    const int link = smallest.at(std::minmax(i, j));
    const Edge& e = g.edge(link);
    const Vertex entry = g.cluster_of(e.u) == j ? e.u : e.v;
    edges.push_back(link);
    append_cluster_tree(g, j, entry, edges);
  }

  ApproxResult r;
  r.tree = make_tree_solution(g, std::move(edges));
  r.gamma = gamma(g);
  r.weight = tree_weight(g, r.tree);
  r.certificate = ratio_bound(g.n(), g.k(), r.gamma);
  return r;
}

ClusteredMst clustered_mst(const ClusteredGraph& g) {
  if (!g.clusters_connected()) throw InfeasibleInstance("some cluster is disconnected");
  ClusteredMst out;

  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < g.k(); ++i) {
    const auto members = g.cluster(i);
    for (std::size_t p = 0; p < members.size(); ++p)
      local[static_cast<std::size_t>(members[p])] = static_cast<int>(p);
  }
  std::vector<std::vector<WeightedEdge>> intra(static_cast<std::size_t>(g.k()));
  std::map<std::pair<int, int>, int> lightest;  // cluster pair -> edge id
  for (int id = 0; id < g.m(); ++id) {
    const Edge& e = g.edge(id);
    const int a = g.cluster_of(e.u);
    const int b = g.cluster_of(e.v);
    if (a == b) {
      intra[static_cast<std::size_t>(a)].push_back(
          {local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.w, id});
      continue;
    }
    auto [it, inserted] = lightest.emplace(std::minmax(a, b), id);
    if (!inserted && e.w < g.edge(it->second).w) it->second = id;
  }

  for (int i = 0; i < g.k(); ++i) {
    const auto& list = intra[static_cast<std::size_t>(i)];
    const SpanningForest f = minimum_spanning_tree(g.cluster_size(i), list);
    for (int pos : f.edges) out.edges.push_back(list[static_cast<std::size_t>(pos)].provenance);
    out.weight += f.weight;
  }

  std::vector<WeightedEdge> cross;
  for (const auto& [pair, id] : lightest) cross.push_back({pair.first, pair.second, g.edge(id).w, id});
  std::sort(cross.begin(), cross.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.provenance < b.provenance; });
  try {
    const SpanningForest f = minimum_spanning_tree(g.k(), cross);
    for (int pos : f.edges) out.edges.push_back(cross[static_cast<std::size_t>(pos)].provenance);
    out.weight += f.weight;
  } catch (const GraphDisconnected&) {
    throw InfeasibleInstance("quotient graph disconnected");
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

ApproxResult cluspt_approx_mst(const ClusteredGraph& g) {
  const ClusteredMst mst = clustered_mst(g);
  ApproxResult r;
  r.tree = make_tree_solution(g, mst.edges);
  r.gamma = gamma(g);
  r.weight = mst.weight;
  return r;
}

}  // namespace clustree
