#include "doctest.h"

#include "clustree/approx.hpp"
#include "clustree/exact.hpp"
#include "clustree/random.hpp"
#include "fixtures.hpp"

using namespace clustree;

TEST_CASE("ratio_bound terms") {
  const auto p6 = ratio_bound(6, 2, 1);
  CHECK(p6.applicable);
  CHECK(p6.terms[0] == Rational(48));
  CHECK(p6.terms[1] == Rational(144));
  CHECK(p6.terms[2] == Rational(2));
  CHECK(p6.rho == Rational(2));
  CHECK(ratio_bound(ClusteredGraph(fixtures::p6())).rho == Rational(2));

  const auto odd = ratio_bound(10, 3, 3);
  CHECK(odd.terms[0] == Rational(40));
  CHECK(odd.terms[1] == Rational(400, 9));
  CHECK(odd.rho == Rational(6));

  const auto big = ratio_bound(8, 8, 7);
  CHECK(big.terms[1] == Rational(256, 49));
  CHECK(big.rho == Rational(256, 49));
}

TEST_CASE("ratio_bound lower bound") {
  CHECK(ratio_bound(10, 2, 2).lower_bound == 2);
  CHECK(ratio_bound(10, 2, 3).lower_bound == 4);
  CHECK(ratio_bound(10, 2, 1).lower_bound == 1);
  CHECK(ratio_bound(10, 2, 4).lower_bound == 6);
  // Sums of distances along a diametral path through s, computed directly.
  for (Cost g = 1; g <= 12; ++g) {
    Cost best = kInfinity;
    for (Cost pos = 0; pos <= g; ++pos) {
      Cost sum = 0;
      for (Cost v = 0; v <= g; ++v) sum += v > pos ? v - pos : pos - v;
      best = std::min(best, sum);
    }
    CHECK(ratio_bound(20, 2, g).lower_bound == best);
  }
}

TEST_CASE("ratio_bound with gamma zero") {
  const auto r = ratio_bound(5, 5, 0);
  CHECK_FALSE(r.applicable);
  CHECK(r.note == "2γ term = 0; bound vacuous");
}

TEST_CASE("clubfs_approx fixtures") {
  const ClusteredGraph p6(fixtures::p6());
  const auto r = clubfs_approx(p6);
  CHECK(r.tree.cost == 10);
  CHECK(r.tree.feasible);
  CHECK(r.gamma == 1);
  REQUIRE(r.certificate);
  CHECK(r.certificate->rho == Rational(2));

  const auto path = clubfs_approx(ClusteredGraph(fixtures::path4()));
  CHECK(path.tree.cost == 6);

  // All singletons: the quotient is G itself and the result is a BFS tree.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ClusteredGraph g(gen_random_clustered(seed, 12, 20, 12));
    const auto bfs = shortest_path_tree(g.adjacency(), g.source(), Metric::Hops);
    CHECK(clubfs_approx(g).tree.cost == bfs.total());
  }
}

TEST_CASE("clubfs_approx errors") {
  auto weighted = fixtures::p6();
  weighted.weighted = true;
  CHECK_THROWS_WITH_AS(clubfs_approx(ClusteredGraph(weighted)), "approx requires unweighted instance",
                       InvalidInput);

  ClusteredInstance split;
  split.n = 3;
  split.edges = {{0, 1, 1}, {1, 2, 1}};
  split.clusters = {{0, 2}, {1}};
  CHECK_THROWS_AS(clubfs_approx(ClusteredGraph(split)), InfeasibleInstance);

  ClusteredInstance apart;
  apart.n = 4;
  apart.edges = {{0, 1, 1}, {2, 3, 1}};
  apart.clusters = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(clubfs_approx(ClusteredGraph(apart)), InfeasibleInstance);
}

TEST_CASE("clubfs_approx bounds against the oracle") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const ClusteredGraph g(gen_random_clustered(seed, 9, 13, 3));
    const auto approx = clubfs_approx(g);
    CHECK(approx.tree.feasible);
    CHECK(broadcast_cost(g, approx.tree) == approx.tree.cost);
    const auto opt = oracle_spanning_trees(g);
    REQUIRE(opt.feasible);
    CHECK(opt.opt <= approx.tree.cost);
    if (approx.gamma == 0) continue;
    CHECK(approx.certificate->rho.bounds_product(approx.tree.cost, opt.opt));
    CHECK(approx.tree.cost <= 2 * approx.gamma * opt.opt);
    CHECK(approx.tree.cost <= approx.gamma * opt.opt + approx.gamma * g.n());
    CHECK(opt.opt >= approx.certificate->lower_bound);
  }
}

TEST_CASE("clustered_mst") {
  const ClusteredGraph p6(fixtures::p6());
  CHECK(clustered_mst(p6).weight == 5);

  // The heavy intra-cluster edge 0-2 is never needed.
  ClusteredInstance inst;
  inst.n = 4;
  inst.weighted = true;
  inst.edges = {{0, 1, 1}, {0, 2, 9}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
  inst.clusters = {{0, 1, 2}, {3}};
  const ClusteredGraph g(inst);
  const auto mst = clustered_mst(g);
  CHECK(mst.weight == 3);
  CHECK(std::find(mst.edges.begin(), mst.edges.end(), g.find_edge(0, 2)) == mst.edges.end());

  // The unconstrained MST (weight 3) leaves cluster {0,3} disconnected.
  ClusteredInstance sq;
  sq.n = 4;
  sq.weighted = true;
  sq.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 10}, {1, 3, 1}};
  sq.clusters = {{0, 3}, {1}, {2}};
  const ClusteredGraph sg(sq);
  CHECK(clustered_mst(sg).weight == 12);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ClusteredGraph all(gen_random_clustered(seed, 8, 12, 8, 5));
    std::vector<WeightedEdge> edges;
    for (int id = 0; id < all.m(); ++id) edges.push_back({all.edge(id).u, all.edge(id).v, all.edge(id).w, id});
    CHECK(clustered_mst(all).weight == minimum_spanning_tree(all.n(), edges).weight);
  }
}

TEST_CASE("cluspt_approx_mst") {
  const auto p6 = cluspt_approx_mst(ClusteredGraph(fixtures::p6()));
  CHECK(p6.weight == 5);
  CHECK(p6.tree.feasible);
  CHECK_FALSE(p6.certificate);

  auto whole = fixtures::p6();
  whole.clusters = {{0, 1, 2, 3, 4, 5}};
  const ClusteredGraph wg(whole);
  const auto w = cluspt_approx_mst(wg);
  CHECK(w.weight == 5);

  ClusteredInstance pair;
  pair.n = 2;
  pair.weighted = true;
  pair.edges = {{0, 1, 4}};
  pair.clusters = {{0}, {1}};
  CHECK(cluspt_approx_mst(ClusteredGraph(pair)).tree.cost == 4);

  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const ClusteredGraph g(gen_random_clustered(seed, 9, 13, 3, 4));
    const auto approx = cluspt_approx_mst(g);
    const auto opt = oracle_spanning_trees(g);
    REQUIRE(opt.feasible);
    CHECK(approx.tree.feasible);
    CHECK(approx.weight <= tree_weight(g, opt.tree));
    CHECK(approx.tree.cost <= g.n() * opt.opt);
    CHECK(approx.weight == clustered_mst(g).weight);
  }
}
