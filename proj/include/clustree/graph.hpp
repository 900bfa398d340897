#pragma once

#include <span>
#include <vector>

#include "clustree/core.hpp"
#include "clustree/instance.hpp"

namespace clustree {

struct Arc {
  Vertex to = 0;
  int edge = -1;
  Weight w = 1;
};

/// Out-arcs per vertex, each list sorted by (to, edge).
using Adjacency = std::vector<std::vector<Arc>>;

/// Hops ignores arc weights (BFS); Weighted runs Dijkstra.
enum class Metric { Hops, Weighted };

struct PathTree {
  Vertex root = 0;
  std::vector<Vertex> parent;    // root maps to itself, unreachable to -1
  std::vector<int> parent_edge;  // -1 at the root and at unreachable vertices
  std::vector<Cost> dist;        // kInfinity when unreachable

  bool reaches(Vertex v) const { return dist[static_cast<std::size_t>(v)] < kInfinity; }
  /// true when every vertex of the allowed set was reached.
  bool spans(std::span<const char> allowed = {}) const;
  Cost total() const;
};

/// Shortest-path tree from root, restricted to vertices with allowed[v] != 0
/// when a mask is given. Parents are chosen deterministically: among the
/// settled predecessors that realise dist(v), the smallest vertex id wins,
/// then the smallest edge id.
PathTree shortest_path_tree(const Adjacency& adj, Vertex root, Metric metric,
                            std::span<const char> allowed = {});

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
  int provenance = -1;
};

struct SpanningForest {
  std::vector<int> edges;  // positions in the input edge list
  Weight weight = 0;
};

/// Kruskal; ties broken by input position. Throws GraphDisconnected.
SpanningForest minimum_spanning_tree(int num_vertices, std::span<const WeightedEdge> edges);

/// Read-only adjacency view over a structurally valid instance.
class ClusteredGraph {
 public:
  explicit ClusteredGraph(ClusteredInstance inst);

  const ClusteredInstance& instance() const { return inst_; }
  int n() const { return inst_.n; }
  int m() const { return inst_.num_edges(); }
  int k() const { return inst_.num_clusters(); }
  Vertex source() const { return inst_.source; }
  bool weighted() const { return inst_.weighted; }
  Metric metric() const { return inst_.weighted ? Metric::Weighted : Metric::Hops; }

  const Edge& edge(int id) const { return inst_.edges[static_cast<std::size_t>(id)]; }
  const Adjacency& adjacency() const { return adj_; }
  std::span<const Arc> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  int cluster_of(Vertex v) const { return cluster_of_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> cluster(int i) const { return inst_.clusters[static_cast<std::size_t>(i)]; }
  int cluster_size(int i) const { return static_cast<int>(cluster(i).size()); }
  int source_cluster() const { return cluster_of(inst_.source); }
  bool is_intra(int edge_id) const {
    return cluster_of(edge(edge_id).u) == cluster_of(edge(edge_id).v);
  }
  /// vertex mask of cluster i, usable as the `allowed` argument.
  std::span<const char> cluster_mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }
  /// true for vertices incident to at least one inter-cluster edge.
  bool is_boundary(Vertex v) const { return boundary_[static_cast<std::size_t>(v)] != 0; }

  /// Edge id joining u and v, or -1.
  int find_edge(Vertex u, Vertex v) const;

  /// Shortest-path tree of G[V_i] rooted at root, under the instance metric.
  PathTree cluster_tree(int cluster, Vertex root) const;

  bool clusters_connected() const;

 private:
  ClusteredInstance inst_;
  Adjacency adj_;
  std::vector<int> cluster_of_;
  std::vector<std::vector<char>> masks_;
  std::vector<char> boundary_;
};

/// γ: the largest diameter of an induced cluster subgraph, in hops for
/// unweighted instances and in weight otherwise. Throws InfeasibleInstance
/// when some cluster is disconnected.
Cost gamma(const ClusteredGraph& g);

struct QuotientEdge {
  int a = 0;  // cluster index
  int b = 0;
  int provenance = -1;  // original edge id
};

/// Cluster-contracted multigraph: one multi-edge per inter-cluster edge.
struct QuotientGraph {
  int k = 0;
  std::vector<QuotientEdge> edges;
  Adjacency adjacency;  // arcs carry the quotient edge index and original weight
};

QuotientGraph contract_clusters(const ClusteredGraph& g);

/// A spanning tree together with its distances from the source.
struct SpanningTreeSolution {
  std::vector<Vertex> parent;  // source maps to itself
  std::vector<Cost> dist;
  std::vector<int> edges;  // edge ids, ascending
  Cost cost = 0;
  bool feasible = false;
};

/// Builds the rooted solution for a set of edge ids. Throws InvalidInput
/// unless the edges form a spanning tree.
SpanningTreeSolution make_tree_solution(const ClusteredGraph& g, std::vector<int> edge_ids);

/// Recomputes Σ_v d_T(s, v) by walking the parent mapping. Throws
/// InvalidInput when the mapping is not a spanning tree of G rooted at s.
Cost broadcast_cost(const ClusteredGraph& g, const SpanningTreeSolution& tree);

/// true iff every cluster induces a connected subtree of the tree.
bool is_feasible_tree(const ClusteredGraph& g, const SpanningTreeSolution& tree);

Weight tree_weight(const ClusteredGraph& g, const SpanningTreeSolution& tree);

}  // namespace clustree
