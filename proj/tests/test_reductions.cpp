#include "doctest.h"

#include "clustree/exact.hpp"
#include "clustree/reductions.hpp"

using namespace clustree;

namespace {

CnfFormula single_clause() {
  CnfFormula phi;
  phi.num_vars = 3;
  phi.clauses = {{Literal{0, false}, Literal{1, false}, Literal{2, false}}};
  return phi;
}

X3cInstance x3c(int eta, std::vector<std::array<int, 3>> sets) {
  X3cInstance x;
  x.eta = eta;
  x.sets = std::move(sets);
  return x;
}

}  // namespace

TEST_CASE("sat_bruteforce") {
  const auto one = sat_bruteforce(single_clause());
  CHECK(one.satisfiable);
  CHECK(one.assignment.size() == 3);
  CHECK_FALSE(sat_bruteforce(all_patterns_formula()).satisfiable);
  CnfFormula empty;
  empty.num_vars = 2;
  CHECK(sat_bruteforce(empty).satisfiable);
  CnfFormula huge;
  huge.num_vars = 25;
  CHECK_THROWS_AS(sat_bruteforce(huge), BudgetExceeded);

  // Witnesses satisfy every clause.
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = random_3cnf(rng, 4, 12);
    const auto r = sat_bruteforce(phi);
    if (!r.satisfiable) continue;
    for (const Clause& c : phi.clauses) {
      bool sat = false;
      for (const Literal& lit : c) sat = sat || (r.assignment[static_cast<std::size_t>(lit.var)] != lit.negated);
      CHECK(sat);
    }
  }
}

TEST_CASE("x3c_bruteforce") {
  CHECK(x3c_bruteforce(x3c(1, {{0, 1, 2}})).solvable);
  CHECK_FALSE(x3c_bruteforce(x3c(2, {{0, 1, 2}, {0, 1, 3}})).solvable);
  const auto r = x3c_bruteforce(x3c(2, {{0, 1, 3}, {0, 1, 2}, {3, 4, 5}}));
  CHECK(r.solvable);
  CHECK(r.cover == std::vector<int>{1, 2});
  X3cInstance big;
  big.eta = 21;
  for (int j = 0; j < 21; ++j) big.sets.push_back({3 * j, 3 * j + 1, 3 * j + 2});
  CHECK_THROWS_AS(x3c_bruteforce(big), BudgetExceeded);
  CHECK_THROWS_AS(validate_x3c(x3c(1, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}})), InvalidInput);
  CHECK_THROWS_AS(validate_x3c(x3c(1, {{0, 0, 2}})), InvalidInput);
}

TEST_CASE("CluBFS gadget sizes and structure") {
  const auto cert = gen_clubfs_from_3cnf(single_clause());
  CHECK(cert.instance.n == 10);
  CHECK(cert.instance.num_edges() == 15);
  CHECK(cert.sat_threshold == 17);
  CHECK(cert.unsat_threshold == 20);
  CHECK(validate_instance(cert.instance).ok());
  CHECK(cert.instance.num_clusters() == 5);

  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int eta = 1 + trial % 5;
    const int mu = trial % 9;
    const auto c = gen_clubfs_from_3cnf(random_3cnf(rng, eta, mu));
    CHECK(c.instance.n == 3 * mu + 2 * eta + 1);
    CHECK(c.instance.num_edges() == 6 * mu + 3 * eta);
    CHECK(validate_instance(c.instance).ok());
  }

  const auto unsat = gen_clubfs_from_3cnf(all_patterns_formula());
  CHECK(unsat.unsat_threshold == 76);
}

TEST_CASE("CluBFS gadget dichotomy on small formulas") {
  const ClusteredGraph sat(gen_clubfs_from_3cnf(single_clause()).instance);
  CHECK(fpt2_solve(sat, Problem::CluBFS).opt == 17);

  const auto cert = gen_clubfs_from_3cnf(all_patterns_formula());
  const ClusteredGraph g(cert.instance);
  CHECK(fpt2_solve(g, Problem::CluBFS).opt >= cert.unsat_threshold);
}

TEST_CASE("CluSPT gadget") {
  for (int m : {1, 3, 20}) {
    const auto c = gen_cluspt_from_3cnf(single_clause(), m);
    CHECK(c.instance.n == 1 + 2 * 3 + 1 * (4 + m));
    CHECK(c.instance.weighted);
    CHECK(validate_instance(c.instance).ok());
    CHECK(c.sat_threshold == 3);
    CHECK(c.unsat_threshold == 3 + m + 4);
  }
  const ClusteredGraph sat(gen_cluspt_from_3cnf(single_clause(), 20).instance);
  CHECK(fpt2_solve(sat, Problem::CluSPT).opt == 3);

  const auto unsat = gen_cluspt_from_3cnf(all_patterns_formula(), 20);
  CHECK(fpt2_solve(ClusteredGraph(unsat.instance), Problem::CluSPT).opt >= 27);

  Weight ones = 0;
  for (const Edge& e : unsat.instance.edges) ones += e.w;
  CHECK(ones == 3);
  CHECK_THROWS_AS(gen_cluspt_from_3cnf(single_clause(), 0), InvalidInput);
}

TEST_CASE("CluSP gadget") {
  const auto solvable = gen_clusp_from_x3c(x3c(1, {{0, 1, 2}}), 40);
  const ClusteredGraph g(solvable.instance);
  CHECK(solvable.s == 0);
  CHECK(solvable.t == 3);
  CHECK(solvable.sat_threshold == 15);
  const auto p = clusp_exact_dp(g, solvable.s, solvable.t);
  CHECK(p.length <= 15);
  CHECK(p.length == 6);

  const auto unsolvable = gen_clusp_from_x3c(x3c(2, {{0, 1, 2}, {0, 1, 3}}), 40);
  const ClusteredGraph u(unsolvable.instance);
  CHECK(clusp_exact_dp(u, unsolvable.s, unsolvable.t).length >= 40);

  // Top paths have 6 edges: the u-chain of a set plus its three item
  // endpoints; bottom paths have 2.
  const auto mixed = gen_clusp_from_x3c(x3c(1, {{0, 1, 2}, {0, 1, 2}}), 5);
  const ClusteredGraph mg(mixed.instance);
  int top = 0;
  int bottom = 0;
  const int y_centre = 4 * 2 + 3 * (1 + 2 * 5);
  for (const Edge& e : mixed.instance.edges) {
    const bool u_end = e.u < 8;
    if (!u_end || e.v < 8) continue;
    if (mg.cluster_of(e.v) == mg.cluster_of(y_centre)) ++bottom;
    else ++top;
  }
  CHECK(top == 2 * 6);
  CHECK(bottom == 2 * 2);
  CHECK(validate_instance(mixed.instance).ok());
  CHECK(clusp_exact_dp(mg, mixed.s, mixed.t).length == 6 + 2 + 1);

  CHECK_THROWS_AS(gen_clusp_from_x3c(x3c(2, {{0, 1, 2}}), 5), InvalidInput);
}

TEST_CASE("random generators") {
  Rng a(42);
  Rng b(42);
  CHECK(random_3cnf(a, 3, 5) == random_3cnf(b, 3, 5));
  for (int trial = 0; trial < 30; ++trial) {
    const int eta = 1 + trial % 3;
    const int mu = eta == 1 ? 1 : eta + trial % (2 * eta + 1);
    const auto x = random_x3c(a, eta, mu, trial % 2 == 0);
    CHECK(x.num_sets() == mu);
    CHECK_NOTHROW(validate_x3c(x));
    if (trial % 2 == 0) CHECK(x3c_bruteforce(x).solvable);
  }
  CHECK(gen_random_clustered(5, 10, 14, 4) == gen_random_clustered(5, 10, 14, 4));
  CHECK(gen_random_clustered(5, 10, 14, 4) != gen_random_clustered(6, 10, 14, 4));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = gen_random_clustered(seed, 10, 14, 4, 4);
    CHECK(validate_instance(inst).ok());
    CHECK(inst.num_edges() == 14);
    CHECK(inst.num_clusters() == 4);
  }
  const auto all = gen_random_clustered(1, 6, 8, 6);
  for (const auto& c : all.clusters) CHECK(c.size() == 1);
  CHECK_THROWS_AS(gen_random_clustered(1, 4, 7, 2), InvalidInput);
  CHECK_THROWS_AS(gen_random_clustered(1, 4, 3, 5), InvalidInput);
}
