#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "clustree/graph.hpp"
#include "clustree/subset_convolution.hpp"

namespace clustree {

enum class Problem { CluBFS, CluSPT };

/// Per-cluster distance data shared by the subset-DP solver.
struct ClusterTables {
  int n = 0;
  /// Σ_{u∈R} d_{G[R]}(v, u) for the cluster R containing v.
  std::vector<Cost> tree_cost;
  /// d_{G[R]}(u, v) when u and v share a cluster, kInfinity otherwise; row-major n×n.
  std::vector<Cost> intra_dist;
  /// ℓ(v, v'): shortest way from v to v' that stays inside v's cluster until
  /// its last edge (x, v'); kInfinity when no such edge exists.
  std::vector<Cost> ell;
  std::vector<Vertex> ell_via;  // the x realising ℓ (smallest id on ties), -1 if none
  std::vector<int> ell_edge;    // edge id of (x, v'), -1 if none

  Cost distance(Vertex u, Vertex v) const { return intra_dist[index(u, v)]; }
  Cost link(Vertex v, Vertex to) const { return ell[index(v, to)]; }
  int link_edge(Vertex v, Vertex to) const { return ell_edge[index(v, to)]; }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
  }
};

/// Throws InfeasibleInstance when a cluster is disconnected.
ClusterTables cluster_tables(const ClusteredGraph& g);

/// The subset-DP table of one round: OPT_{v,i}[H] over the ground set
/// U = clusters ∪ A, where A holds ⌈log₂ n⌉ label bits whose subsets name
/// the vertex a child subtree is attached through.
///
/// Bits 0..k-1 of H are clusters, bits k..k+b-1 are the labels. Only entries
/// with A ⊆ H carry information; all others read as the cap.
class DpTable {
 public:
  DpTable() = default;
  DpTable(int n, int k, Cost cap);

  int num_vertices() const { return n_; }
  int num_clusters() const { return k_; }
  int label_bits() const { return b_; }
  int universe_size() const { return k_ + b_; }
  Cost cap() const { return cap_; }
  std::uint32_t cluster_bits() const { return (std::uint32_t{1} << k_) - 1; }
  std::uint32_t label_set() const { return ((std::uint32_t{1} << b_) - 1) << k_; }

  /// μ: the vertex encoded by H ∩ A, or nullopt when the code is ≥ n.
  std::optional<Vertex> decode(std::uint32_t h) const;
  /// The H ∩ A part that encodes v.
  std::uint32_t encode(Vertex v) const { return static_cast<std::uint32_t>(v) << k_; }

  Cost value(Vertex v, int level, std::uint32_t h) const;

  /// Entry for the cluster set s ⊆ clusters (implicitly H = s ∪ A).
  Cost& at(Vertex v, int level, std::uint32_t s) { return values_[slot(v, level, s)]; }
  Cost at(Vertex v, int level, std::uint32_t s) const { return values_[slot(v, level, s)]; }

 private:
  std::size_t slot(Vertex v, int level, std::uint32_t s) const {
    return ((static_cast<std::size_t>(level - 1) * static_cast<std::size_t>(n_)) + static_cast<std::size_t>(v)) *
               (std::size_t{1} << k_) +
           s;
  }

  int n_ = 0;
  int k_ = 0;
  int b_ = 0;
  Cost cap_ = 0;
  std::vector<Cost> values_;
};

/// One "v i H value" line per informative entry.
void write_dp_trace(std::ostream& os, const DpTable& table);

struct Fpt1Options {
  ConvolutionMethod convolution = ConvolutionMethod::Direct;
  int threads = 1;
  /// After convergence, also run the round with twice the cap and record it.
  bool extra_round = false;
  /// Largest accepted ground-set size |U|.
  int max_universe = 22;
};

struct Fpt1Round {
  Cost cap = 0;
  Cost value = 0;  // OPT_{s,k}[U] at the end of the round
};

struct Fpt1Result {
  SpanningTreeSolution tree;
  Cost opt = 0;
  std::vector<Fpt1Round> rounds;
  DpTable table;  // the converged round
};

/// Exact solver parameterised by the number of clusters k: doubling rounds
/// of a level-by-level subset DP, each level built from one min-sum subset
/// convolution per vertex.
Fpt1Result fpt1_solve(const ClusteredGraph& g, Problem problem, const Fpt1Options& options = {});

struct Fpt2Options {
  /// Enumerate every vertex of a cluster as its root instead of only
  /// boundary vertices.
  bool full_roots = false;
  int threads = 1;
  std::int64_t max_vectors = 200'000'000;
};

struct Fpt2Result {
  SpanningTreeSolution tree;
  Cost opt = 0;
  std::vector<Vertex> roots;  // per cluster
  std::int64_t vectors = 0;   // root vectors enumerated
  std::int64_t spanning_vectors = 0;
};

/// Candidate roots per cluster: the source for its own cluster, otherwise
/// boundary vertices (or every member with full_roots).
std::vector<std::vector<Vertex>> fpt2_candidate_roots(const ClusteredGraph& g, bool full_roots);

/// ∏ of candidate-root counts, saturating at INT64_MAX.
std::int64_t fpt2_vector_count(const ClusteredGraph& g, bool full_roots);

/// Exact solver parameterised by the number of vertices in non-singleton
/// clusters: enumerates cluster-root vectors and, for each, takes a
/// shortest-path tree of the root-directed auxiliary graph.
Fpt2Result fpt2_solve(const ClusteredGraph& g, Problem problem, const Fpt2Options& options = {});

struct OracleResult {
  bool feasible = false;
  Cost opt = kInfinity;
  SpanningTreeSolution tree;
  /// Smallest total edge weight among the feasible trees.
  Weight min_weight = kInfinity;
  std::int64_t trees_examined = 0;
};

inline constexpr std::int64_t kDefaultOracleBudget = 5'000'000;

/// Brute force over all (n-1)-edge subsets, minimising broadcast cost and,
/// separately, total weight. Throws BudgetExceeded when
/// C(m, n-1) exceeds the budget.
OracleResult oracle_spanning_trees(const ClusteredGraph& g, std::int64_t budget = kDefaultOracleBudget);

/// C(m, r), saturating at INT64_MAX.
std::int64_t binomial(std::int64_t m, std::int64_t r);

struct ClusteredPath {
  Cost length = kInfinity;
  std::vector<Vertex> vertices;  // s .. t, empty when unreachable

  bool reachable() const { return length < kInfinity; }
};

/// true iff path is a simple walk along edges of g on which every cluster
/// occupies one contiguous block.
bool is_clustered_path(const ClusteredGraph& g, std::span<const Vertex> path);

struct CluspOptions {
  /// Largest number of non-singleton clusters accepted.
  int bit_budget = 25;
};

/// Shortest clustered s-t path by search over (vertex, departed clusters).
ClusteredPath clusp_exact_dp(const ClusteredGraph& g, Vertex s, Vertex t, const CluspOptions& options = {});

/// Brute force over simple s-t paths; requires n <= max_vertices.
ClusteredPath clusp_oracle_paths(const ClusteredGraph& g, Vertex s, Vertex t, int max_vertices = 12);

}  // namespace clustree
