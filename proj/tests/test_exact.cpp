#include <sstream>

#include "doctest.h"

#include "clustree/approx.hpp"
#include "clustree/exact.hpp"
#include "clustree/random.hpp"
#include "clustree/reductions.hpp"
#include "fixtures.hpp"

using namespace clustree;

namespace {

std::vector<Cost> direct_oracle(const std::vector<Cost>& f, const std::vector<Cost>& g, int u, Cost cap) {
  std::vector<Cost> out(f.size(), cap);
  for (std::uint32_t y = 0; y < (1U << u); ++y)
    for (std::uint32_t z = 0; z < (1U << u); ++z)
      if ((z & y) == z) out[y] = std::min(out[y], f[z] + g[y & ~z]);
  return out;
}

void check_witness(const ClusteredGraph& g, const SpanningTreeSolution& tree, Cost opt) {
  CHECK(tree.feasible);
  CHECK(is_feasible_tree(g, tree));
  CHECK(broadcast_cost(g, tree) == opt);
  CHECK(tree.cost == opt);
}

}  // namespace

TEST_CASE("cluster_tables") {
  const ClusteredGraph p6(fixtures::p6());
  const auto t = cluster_tables(p6);
  for (Vertex v = 0; v < 6; ++v) CHECK(t.tree_cost[static_cast<std::size_t>(v)] == 2);
  CHECK(t.link(0, 3) == 2);
  CHECK(t.link(2, 3) == 1);
  CHECK(t.link(0, 4) == kInfinity);
  CHECK(t.distance(0, 2) == 1);
  CHECK(t.distance(0, 3) == kInfinity);

  const ClusteredGraph single(fixtures::singletons(fixtures::p6()));
  const auto s = cluster_tables(single);
  CHECK(s.tree_cost[3] == 0);
  CHECK(s.link(3, 4) == 1);
  CHECK(s.link(3, 2) == 1);
  CHECK(s.link(3, 0) == kInfinity);
}

TEST_CASE("subset_convolution_minsum") {
  const Cost cap = 50;
  std::vector<Cost> eps(1U << 3, cap);
  eps[0] = 0;
  const auto id = subset_convolution_minsum(eps, eps, 3, cap);
  CHECK(id[0] == 0);
  for (std::size_t y = 1; y < id.size(); ++y) CHECK(id[y] == cap);

  std::vector<Cost> f(4), g(4);
  for (std::uint32_t z = 0; z < 4; ++z) {
    f[z] = std::popcount(z);
    g[z] = 2 * std::popcount(z);
  }
  const auto lin = subset_convolution_minsum(f, g, 2, cap);
  for (std::uint32_t y = 0; y < 4; ++y) CHECK(lin[y] == std::popcount(y));

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int u = 6;
    std::vector<Cost> a(1U << u), b(1U << u);
    for (auto& x : a) x = rng.uniform(0, 2 * cap);
    for (auto& x : b) x = rng.uniform(0, 2 * cap);
    const auto want = direct_oracle(a, b, u, cap);
    CHECK(subset_convolution_minsum(a, b, u, cap) == want);
    CHECK(subset_convolution_minsum(a, b, u, cap, ConvolutionMethod::Ranked) == want);
    // ε is the identity once values are clamped to the cap.
    std::vector<Cost> e(1U << u, cap);
    e[0] = 0;
    auto clamped = a;
    for (auto& x : clamped) x = std::min(x, cap);
    CHECK(subset_convolution_minsum(a, e, u, cap) == clamped);
  }
}

TEST_CASE("ranked convolution matches direct at u = 10") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Cost cap = 8;
    std::vector<Cost> a(1U << 10), b(1U << 10);
    for (auto& x : a) x = rng.uniform(0, 2 * cap);
    for (auto& x : b) x = rng.uniform(0, 2 * cap);
    CHECK(subset_convolution_minsum(a, b, 10, cap, ConvolutionMethod::Ranked) ==
          subset_convolution_minsum(a, b, 10, cap, ConvolutionMethod::Direct));
  }
}

TEST_CASE("DpTable label decoding") {
  DpTable t(6, 2, 4);
  CHECK(t.label_bits() == 3);
  CHECK(t.universe_size() == 5);
  CHECK(t.decode(t.encode(5) | 0b11) == 5);
  CHECK_FALSE(t.decode(std::uint32_t{6} << 2).has_value());
  CHECK_FALSE(t.decode(std::uint32_t{7} << 2).has_value());
  DpTable one(1, 1, 4);
  CHECK(one.label_bits() == 0);
  CHECK(one.decode(0) == 0);
}

TEST_CASE("exact solvers on fixtures") {
  for (const auto& [inst, want] : {std::pair{fixtures::p6(), Cost{10}}, std::pair{fixtures::path4(), Cost{6}},
                                   std::pair{fixtures::triangle(), Cost{2}}}) {
    const ClusteredGraph g(inst);
    const auto f1 = fpt1_solve(g, Problem::CluBFS);
    const auto f2 = fpt2_solve(g, Problem::CluBFS);
    const auto orc = oracle_spanning_trees(g);
    CHECK(f1.opt == want);
    CHECK(f2.opt == want);
    CHECK(orc.opt == want);
    check_witness(g, f1.tree, want);
    check_witness(g, f2.tree, want);
    check_witness(g, orc.tree, want);
  }
  const auto p6 = fpt2_solve(ClusteredGraph(fixtures::p6()), Problem::CluBFS);
  CHECK(p6.roots == std::vector<Vertex>{0, 3});
}

TEST_CASE("oracle fixtures") {
  ClusteredInstance p6 = fixtures::p6();
  CHECK(binomial(7, 5) == 21);
  const auto r = oracle_spanning_trees(ClusteredGraph(p6));
  CHECK(r.trees_examined > 0);
  CHECK(r.trees_examined <= 21);
  CHECK_THROWS_AS(oracle_spanning_trees(ClusteredGraph(p6), 20), BudgetExceeded);

  ClusteredInstance split;
  split.n = 3;
  split.edges = {{0, 1, 1}, {1, 2, 1}};
  split.clusters = {{0, 2}, {1}};
  CHECK_FALSE(oracle_spanning_trees(ClusteredGraph(split)).feasible);
}

TEST_CASE("single cluster gives the cluster tree cost") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ClusteredGraph g(gen_random_clustered(seed, 7, 10, 1, seed % 2 ? std::optional<Weight>(3) : std::nullopt));
    const auto t = cluster_tables(g);
    const auto problem = g.weighted() ? Problem::CluSPT : Problem::CluBFS;
    CHECK(fpt1_solve(g, problem).opt == t.tree_cost[static_cast<std::size_t>(g.source())]);
  }
}

TEST_CASE("all singletons give the plain shortest-path tree") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ClusteredGraph g(gen_random_clustered(seed, 8, 12, 8, seed % 2 ? std::optional<Weight>(3) : std::nullopt));
    const auto problem = g.weighted() ? Problem::CluSPT : Problem::CluBFS;
    const Cost spt = shortest_path_tree(g.adjacency(), g.source(), g.metric()).total();
    CHECK(fpt1_solve(g, problem).opt == spt);
    CHECK(fpt2_solve(g, problem).opt == spt);
  }
}

TEST_CASE("solver agreement on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const bool weighted = seed % 2 == 0;
    const int k = 1 + static_cast<int>(seed % 4);
    const ClusteredGraph g(gen_random_clustered(seed, 9, 13, k, weighted ? std::optional<Weight>(4) : std::nullopt));
    const auto problem = weighted ? Problem::CluSPT : Problem::CluBFS;
    const auto orc = oracle_spanning_trees(g);
    REQUIRE(orc.feasible);
    const auto f1 = fpt1_solve(g, problem);
    const auto f2 = fpt2_solve(g, problem);
    const auto full = fpt2_solve(g, problem, {.full_roots = true});
    CHECK(f1.opt == orc.opt);
    CHECK(f2.opt == orc.opt);
    CHECK(full.opt == orc.opt);
    check_witness(g, f1.tree, orc.opt);
    check_witness(g, f2.tree, orc.opt);
  }
}

TEST_CASE("unit weights: CluSPT mode equals CluBFS mode") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto inst = gen_random_clustered(seed, 9, 13, 3);
    const ClusteredGraph unit(inst);
    inst.weighted = true;
    const ClusteredGraph weighted(inst);
    const Cost bfs = fpt1_solve(unit, Problem::CluBFS).opt;
    CHECK(fpt1_solve(weighted, Problem::CluSPT).opt == bfs);
    CHECK(fpt2_solve(weighted, Problem::CluSPT).opt == bfs);
    CHECK(fpt1_solve(unit, Problem::CluSPT).opt == bfs);
  }
}

TEST_CASE("fpt1 rounds and options") {
  const ClusteredGraph g(gen_random_clustered(5, 9, 13, 3));
  const auto plain = fpt1_solve(g, Problem::CluBFS, {.extra_round = true});
  REQUIRE(plain.rounds.size() >= 2);
  CHECK(plain.rounds.back().cap == 2 * plain.rounds[plain.rounds.size() - 2].cap);
  CHECK(plain.rounds.back().value == plain.opt);
  CHECK(plain.rounds[plain.rounds.size() - 2].value == plain.opt);
  for (std::size_t i = 0; i + 2 < plain.rounds.size(); ++i) CHECK(plain.rounds[i].value >= plain.rounds[i].cap);

  const auto fast = fpt1_solve(g, Problem::CluBFS, {.convolution = ConvolutionMethod::Ranked});
  const auto threaded = fpt1_solve(g, Problem::CluBFS, {.threads = 4});
  CHECK(fast.opt == plain.opt);
  CHECK(threaded.opt == plain.opt);
  CHECK(threaded.tree.edges == plain.tree.edges);

  const auto par = fpt2_solve(g, Problem::CluBFS, {.threads = 4});
  CHECK(par.opt == plain.opt);
  CHECK(par.roots == fpt2_solve(g, Problem::CluBFS).roots);

  std::ostringstream trace;
  write_dp_trace(trace, plain.table);
  CHECK(trace.str().find(' ') != std::string::npos);
}

TEST_CASE("exact solvers reject what they cannot solve") {
  auto weighted = fixtures::p6();
  weighted.weighted = true;
  CHECK_THROWS_AS(fpt1_solve(ClusteredGraph(weighted), Problem::CluBFS), InvalidInput);
  CHECK_THROWS_AS(fpt2_solve(ClusteredGraph(weighted), Problem::CluBFS), InvalidInput);

  ClusteredInstance apart;
  apart.n = 4;
  apart.edges = {{0, 1, 1}, {2, 3, 1}};
  apart.clusters = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(fpt1_solve(ClusteredGraph(apart), Problem::CluBFS), InfeasibleInstance);
  CHECK_THROWS_AS(fpt2_solve(ClusteredGraph(apart), Problem::CluBFS), InfeasibleInstance);

  const ClusteredGraph big(gen_random_clustered(3, 14, 30, 4));
  CHECK_THROWS_AS(oracle_spanning_trees(big), BudgetExceeded);
  CHECK_THROWS_AS(fpt2_solve(big, Problem::CluBFS, {.max_vectors = 1}), BudgetExceeded);
  CHECK_THROWS_AS(fpt1_solve(big, Problem::CluBFS, {.max_universe = 4}), BudgetExceeded);
}

TEST_CASE("gadget optimum for a single clause") {
  CnfFormula phi;
  phi.num_vars = 3;
  phi.clauses = {{Literal{0, false}, Literal{1, false}, Literal{2, false}}};
  const auto cert = gen_clubfs_from_3cnf(phi);
  const ClusteredGraph g(cert.instance);
  const auto f2 = fpt2_solve(g, Problem::CluBFS);
  CHECK(f2.opt == 17);
  CHECK(fpt2_solve(g, Problem::CluBFS, {.full_roots = true}).opt == 17);
  CHECK(oracle_spanning_trees(g).opt == 17);
  CHECK(fpt1_solve(g, Problem::CluBFS).opt == 17);
}

TEST_CASE("clustered paths") {
  ClusteredInstance path;
  path.n = 3;
  path.edges = {{0, 1, 1}, {1, 2, 1}};
  path.clusters = {{0}, {1}, {2}};
  const ClusteredGraph pg(path);
  CHECK(clusp_exact_dp(pg, 0, 2).length == 2);
  CHECK(clusp_oracle_paths(pg, 0, 2).length == 2);

  const ClusteredGraph p6(fixtures::p6());
  const auto p = clusp_exact_dp(p6, 0, 5);
  CHECK(p.length == 3);
  CHECK(p.vertices == std::vector<Vertex>{0, 2, 3, 5});
  CHECK(clusp_oracle_paths(p6, 0, 5).length == 3);

  ClusteredInstance cyc;
  cyc.n = 4;
  cyc.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
  cyc.clusters = {{0}, {1, 3}, {2}};
  const ClusteredGraph cg(cyc);
  CHECK(clusp_exact_dp(cg, 0, 2).length == 2);
  CHECK(clusp_oracle_paths(cg, 0, 2).length == 2);

  ClusteredInstance apart;
  apart.n = 4;
  apart.edges = {{0, 1, 1}, {2, 3, 1}};
  apart.clusters = {{0}, {1}, {2}, {3}};
  const ClusteredGraph ag(apart);
  CHECK_FALSE(clusp_exact_dp(ag, 0, 3).reachable());
  CHECK(clusp_oracle_paths(ag, 0, 3).length == kInfinity);
  CHECK(clusp_exact_dp(ag, 2, 2).length == 0);
  CHECK(clusp_oracle_paths(ag, 2, 2).length == 0);
}

TEST_CASE("clustered path needs a detour") {
  // 0-1-2-3 leaves cluster {1,3} and re-enters it; the answer is 0-4-5-6-3.
  ClusteredInstance inst;
  inst.n = 7;
  inst.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 4, 1}, {4, 5, 1}, {5, 6, 1}, {3, 6, 1}};
  inst.clusters = {{0}, {1, 3}, {2}, {4}, {5}, {6}};
  const ClusteredGraph g(inst);
  CHECK_FALSE(is_clustered_path(g, std::vector<Vertex>{0, 1, 2, 3}));
  CHECK(is_clustered_path(g, std::vector<Vertex>{0, 4, 5, 6, 3}));
  const auto p = clusp_exact_dp(g, 0, 3);
  CHECK(p.length == 4);
  CHECK(p.vertices == std::vector<Vertex>{0, 4, 5, 6, 3});
  CHECK(clusp_oracle_paths(g, 0, 3).length == 4);
}

TEST_CASE("clusp_exact_dp matches the path oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const bool weighted = seed % 3 == 0;
    const ClusteredGraph g(gen_random_clustered(seed, 10, 16, 4, weighted ? std::optional<Weight>(3) : std::nullopt,
                                                seed % 2 == 0));
    const Vertex t = static_cast<Vertex>(seed % 10);
    const auto dp = clusp_exact_dp(g, g.source(), t);
    const auto orc = clusp_oracle_paths(g, g.source(), t);
    CHECK(dp.length == orc.length);
    if (dp.reachable()) {
      CHECK(is_clustered_path(g, dp.vertices));
      CHECK(dp.vertices.front() == g.source());
      CHECK(dp.vertices.back() == t);
    }
  }
}

TEST_CASE("clusp budgets") {
  const ClusteredGraph g(gen_random_clustered(1, 12, 16, 4));
  CHECK_THROWS_AS(clusp_exact_dp(g, 0, 1, {.bit_budget = 1}), BudgetExceeded);
  const ClusteredGraph big(gen_random_clustered(1, 13, 16, 4));
  CHECK_THROWS_AS(clusp_oracle_paths(big, 0, 1), BudgetExceeded);
}
