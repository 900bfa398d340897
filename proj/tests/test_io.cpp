#include "doctest.h"

#include "clustree/io.hpp"
#include "clustree/random.hpp"
#include "fixtures.hpp"

using namespace clustree;

namespace {

const char* kP6 =
    R"({"n":6,"weighted":false,"edges":[[0,1,1],[0,2,1],[1,2,1],[2,3,1],[3,4,1],[3,5,1],[4,5,1]],)"
    R"("clusters":[[0,1,2],[3,4,5]],"source":0})"
    "\n";

}  // namespace

TEST_CASE("instance round trip") {
  const auto inst = parse_instance(kP6);
  CHECK(inst == normalize_instance(fixtures::p6()));
  CHECK(serialize_instance(inst) == kP6);

  const auto messy = parse_instance(
      R"({"source":0,"clusters":[[5,3,4],[2,1,0]],"edges":[[1,0],[2,0,1],[2,1,1],[3,2,1],[4,3,1],[5,3,1],[5,4,1]],"weighted":false,"n":6})");
  CHECK(serialize_instance(messy) == kP6);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = gen_random_clustered(seed, 10, 15, 3, seed % 2 ? std::optional<Weight>(4) : std::nullopt);
    const auto text = serialize_instance(r);
    CHECK(parse_instance(text) == r);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("instance parse errors") {
  auto error_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const std::string neg = error_of(
      R"({"n":2,"weighted":true,"edges":[[0,1,-1]],"clusters":[[0],[1]],"source":0})");
  CHECK(neg.find("negative weight") != std::string::npos);
  CHECK(neg.find("edges[0][2]") != std::string::npos);
  const std::string range = error_of(R"({"n":2,"weighted":false,"edges":[[0,1,1]],"clusters":[[0],[1,2]],"source":0})");
  CHECK(range.find("vertex out of range") != std::string::npos);
  CHECK(range.find("clusters[1][1]") != std::string::npos);
  CHECK(error_of("{not json").find("malformed JSON") != std::string::npos);
  CHECK(error_of(R"({"n":2,"weighted":false,"edges":[[0,1,1]],"clusters":[[0,1],[1]],"source":0})")
            .find("overlapping clusters") != std::string::npos);
  CHECK(error_of(R"({"n":2,"weighted":false,"edges":[],"clusters":[[0],[1]]})").find("source") !=
        std::string::npos);
}

TEST_CASE("dimacs") {
  const auto phi = parse_dimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1 2\n-3 0\n");
  CHECK(phi.num_vars == 3);
  REQUIRE(phi.clauses.size() == 2);
  CHECK(phi.clauses[0][1] == Literal{1, true});
  CHECK(phi.clauses[1][2] == Literal{2, true});
  CHECK(parse_dimacs(write_dimacs(phi)) == phi);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), InvalidInput);
}

TEST_CASE("x3c json") {
  const auto x = parse_x3c(R"({"items": 6, "sets": [[0,1,2],[3,4,5]]})");
  CHECK(x.eta == 2);
  CHECK(parse_x3c(write_x3c(x)) == x);
  CHECK_THROWS_AS(parse_x3c(R"({"items": 5, "sets": []})"), InvalidInput);
  CHECK_THROWS_AS(parse_x3c(R"({"items": 3, "sets": [[0,1,3]]})"), InvalidInput);
}

TEST_CASE("solution and certificate documents") {
  SpanningTreeSolution t;
  t.parent = {0, 0};
  t.dist = {0, 1};
  t.cost = 1;
  t.feasible = true;
  CHECK(solution_json(t).dump() == R"({"parent":[0,0],"dist":[0,1],"cost":1,"feasible":true})");

  const auto cert = certificate_json(ratio_bound(6, 2, 1));
  CHECK(cert["rho"] == "2");
  CHECK(cert["terms"]["4nk/gamma"] == "48");
  CHECK(certificate_json(ratio_bound(4, 4, 0))["rho"] == "not applicable");

  ClusteredPath none;
  CHECK(path_json(none)["length"] == "INFINITY");
}

TEST_CASE("dot export") {
  const auto inst = normalize_instance(fixtures::p6());
  SpanningTreeSolution t;
  t.parent = {0, 0, 0, 2, 3, 3};
  const auto dot = export_dot(inst, &t);
  CHECK(dot.rfind("graph clustree {", 0) == 0);
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("subgraph cluster_1") != std::string::npos);
  CHECK(dot.find("subgraph cluster_2") == std::string::npos);
  CHECK(dot.find("2 -- 3 [style=bold]") != std::string::npos);
  CHECK(dot.find("4 -- 5;") != std::string::npos);
  CHECK(dot.back() == '\n');
}
