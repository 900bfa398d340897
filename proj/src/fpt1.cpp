#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "clustree/approx.hpp"
#include "clustree/exact.hpp"

namespace clustree {

namespace {

int ceil_log2(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b;
}

void require_feasible(const ClusteredGraph& g) {
  if (!g.clusters_connected()) throw InfeasibleInstance("some cluster is disconnected");
  const QuotientGraph q = contract_clusters(g);
  if (!shortest_path_tree(q.adjacency, g.source_cluster(), Metric::Hops).spans())
    throw InfeasibleInstance("quotient graph disconnected");
}

void check_problem(const ClusteredGraph& g, Problem problem) {
  if (problem == Problem::CluBFS && g.weighted())
    throw InvalidInput("clubfs requires an unweighted instance");
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) fn(i);
    });
}

class SubsetDp {
 public:
  SubsetDp(const ClusteredGraph& g, const ClusterTables& tables, const Fpt1Options& options)
      : g_(g), tables_(tables), options_(options), k_(g.k()), b_(ceil_log2(g.n())) {
    const std::size_t clusters = std::size_t{1} << k_;
    cluster_volume_.assign(clusters, 0);
    for (std::size_t s = 1; s < clusters; ++s) {
      const int low = std::countr_zero(s);
      cluster_volume_[s] = cluster_volume_[s & (s - 1)] + g.cluster_size(low);
    }
  }

  int universe() const { return k_ + b_; }

  DpTable run_round(Cost cap) const {
    DpTable table(g_.n(), k_, cap);
    const std::size_t clusters = std::size_t{1} << k_;
    for (Vertex v = 0; v < g_.n(); ++v) {
      const std::uint32_t own = std::uint32_t{1} << g_.cluster_of(v);
      for (std::uint32_t s = 0; s < clusters; ++s)
        table.at(v, 1, s) = s == own ? std::min(tables_.tree_cost[static_cast<std::size_t>(v)], cap) : cap;
    }
    const std::size_t size = std::size_t{1} << universe();
    for (int level = 2; level <= k_; ++level) {
      parallel_for(g_.n(), options_.threads, [&](int vi) {
        const auto v = static_cast<Vertex>(vi);
        std::vector<Cost> f(size), gv(size), conv(size);
        fill_split_functions(table, v, level, f, gv);
        subset_convolution_minsum(f, gv, universe(), cap, conv, options_.convolution);
        const std::uint32_t labels = table.label_set();
        for (std::uint32_t s = 0; s < clusters; ++s)
          table.at(v, level, s) = std::min({conv[s | labels], table.at(v, level - 1, s), cap});
      });
    }
    return table;
  }

  /// f(X): attach the subtree on clusters X ∩ 𝒱, rooted at μ(X ∩ A), below v.
  Cost split_child(const DpTable& table, Vertex v, int level, std::uint32_t x) const {
    const Cost cap = table.cap();
    const auto child = table.decode(x);
    const std::uint32_t s = x & table.cluster_bits();
    if (!child || s == 0) return cap;
    if (!(s >> g_.cluster_of(*child) & 1U) || (s >> g_.cluster_of(v) & 1U)) return cap;
    const Cost link = std::min(sat_mul(tables_.link(v, *child), cluster_volume_[s]), cap);
    return link + table.at(*child, level - 1, s);
  }

  /// g(X): the rest of the tree, still rooted at v.
  static Cost split_rest(const DpTable& table, Vertex v, int level, std::uint32_t x) {
    return table.at(v, level - 1, x & table.cluster_bits());
  }

  void rebuild(const DpTable& table, Vertex v, int level, std::uint32_t s, std::vector<int>& edges) const {
    const Cost value = table.at(v, level, s);
    if (value >= table.cap()) throw std::logic_error("fpt1 reconstruction reached a capped entry");
    if (level == 1) {
      const int c = g_.cluster_of(v);
      const PathTree t = g_.cluster_tree(c, v);
      for (Vertex u : g_.cluster(c))
        if (u != v) edges.push_back(t.parent_edge[static_cast<std::size_t>(u)]);
      return;
    }
    if (value == table.at(v, level - 1, s)) {
      rebuild(table, v, level - 1, s, edges);
      return;
    }
    const std::uint32_t h = s | table.label_set();
    for (std::uint32_t z = h;; z = (z - 1) & h) {
      if (split_child(table, v, level, z) + split_rest(table, v, level, h ^ z) == value) {
        const Vertex child = *table.decode(z);
        const std::uint32_t sub = z & table.cluster_bits();
        edges.push_back(tables_.link_edge(v, child));
        rebuild(table, child, level - 1, sub, edges);
        rebuild(table, v, level - 1, s & ~sub, edges);
        return;
      }
      if (z == 0) break;
    }
    throw std::logic_error("fpt1 reconstruction found no split realising the table value");
  }

 private:
  void fill_split_functions(const DpTable& table, Vertex v, int level, std::vector<Cost>& f,
                            std::vector<Cost>& g) const {
    const std::size_t size = f.size();
    for (std::uint32_t x = 0; x < size; ++x) {
      f[x] = split_child(table, v, level, x);
      g[x] = split_rest(table, v, level, x);
    }
  }

  const ClusteredGraph& g_;
  const ClusterTables& tables_;
  const Fpt1Options& options_;
  int k_;
  int b_;
  std::vector<Cost> cluster_volume_;  // η: vertices in the clusters of a set
};

}  // namespace

DpTable::DpTable(int n, int k, Cost cap)
    : n_(n), k_(k), b_(ceil_log2(n)), cap_(cap),
      values_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n) * (std::size_t{1} << k), cap) {}

std::optional<Vertex> DpTable::decode(std::uint32_t h) const {
  const auto code = static_cast<Vertex>((h & label_set()) >> k_);
  if (code >= n_) return std::nullopt;
  return code;
}

Cost DpTable::value(Vertex v, int level, std::uint32_t h) const {
  if ((h & label_set()) != label_set()) return cap_;
  return at(v, level, h & cluster_bits());
}

void write_dp_trace(std::ostream& os, const DpTable& table) {
  os << "# v i H value  (cap " << table.cap() << ", |U| = " << table.universe_size() << ")\n";
  const std::uint32_t clusters = table.cluster_bits() + 1;
  for (int level = 1; level <= table.num_clusters(); ++level)
    for (Vertex v = 0; v < table.num_vertices(); ++v)
      for (std::uint32_t s = 0; s < clusters; ++s)
        os << v << ' ' << level << ' ' << (s | table.label_set()) << ' ' << table.at(v, level, s) << '\n';
}

Fpt1Result fpt1_solve(const ClusteredGraph& g, Problem problem, const Fpt1Options& options) {
  check_problem(g, problem);
  require_feasible(g);
  const ClusterTables tables = cluster_tables(g);
  SubsetDp dp(g, tables, options);
  if (dp.universe() > options.max_universe)
    throw BudgetExceeded("fpt1 ground set too large: |U| = " + std::to_string(dp.universe()));

  // Any round whose cap exceeds a known upper bound on OPT must converge.
  const Cost upper = problem == Problem::CluBFS ? static_cast<Cost>(g.n()) * g.n()
                                                : cluspt_approx_mst(g).tree.cost;
  const std::uint32_t all = (std::uint32_t{1} << g.k()) - 1;

  Fpt1Result result;
  for (Cost cap = 1;; cap *= 2) {
    DpTable table = dp.run_round(cap);
    const Cost value = table.at(g.source(), g.k(), all);
    result.rounds.push_back({cap, value});
    if (value < cap) {
      result.opt = value;
      result.table = std::move(table);
      if (options.extra_round) {
        const DpTable next = dp.run_round(2 * cap);
        result.rounds.push_back({2 * cap, next.at(g.source(), g.k(), all)});
      }
      break;
    }
    if (cap > upper) throw std::logic_error("fpt1 did not converge below a valid upper bound");
  }

  std::vector<int> edges;
  dp.rebuild(result.table, g.source(), g.k(), all, edges);
  result.tree = make_tree_solution(g, std::move(edges));
  if (result.tree.cost != result.opt || !result.tree.feasible)
    throw std::logic_error("fpt1 reconstruction does not match the table optimum");
  return result;
}

}  // namespace clustree
