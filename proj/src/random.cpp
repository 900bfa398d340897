#include "clustree/random.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace clustree {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidInput("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

ClusteredInstance gen_random_clustered(std::uint64_t seed, int n, int m, int k, std::optional<Weight> max_weight,
                                       bool ensure_feasible) {
  if (n < 1 || k < 1 || k > n) throw InvalidInput("need 1 <= k <= n");
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges)
    throw InvalidInput("edge count " + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                       std::to_string(max_edges) + "]");
  if (max_weight && *max_weight < 0) throw InvalidInput("negative weight bound");

  Rng rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  rng.shuffle(order);

  // The first k shuffled vertices seed one cluster each.
  std::vector<std::vector<Vertex>> clusters(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    const int c = i < k ? i : static_cast<int>(rng.uniform(0, k - 1));
    clusters[static_cast<std::size_t>(c)].push_back(order[static_cast<std::size_t>(i)]);
  }

  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<Edge> edges;
  auto weight = [&]() -> Weight { return max_weight ? rng.uniform(0, *max_weight) : 1; };
  auto add = [&](Vertex a, Vertex b) {
    if (a == b) return false;
    if (!present.emplace(std::min(a, b), std::max(a, b)).second) return false;
    edges.push_back(Edge{a, b, weight()});
    return true;
  };

  if (ensure_feasible) {
    for (const auto& members : clusters)
      for (std::size_t i = 1; i < members.size(); ++i)
        add(members[i], members[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
    for (int c = 1; c < k; ++c) {
      const auto& here = clusters[static_cast<std::size_t>(c)];
      const auto& there = clusters[static_cast<std::size_t>(rng.uniform(0, c - 1))];
      add(here[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(here.size()) - 1))],
          there[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(there.size()) - 1))]);
    }
  }
  while (static_cast<int>(edges.size()) < m)
    add(static_cast<Vertex>(rng.uniform(0, n - 1)), static_cast<Vertex>(rng.uniform(0, n - 1)));

  ClusteredInstance inst;
  inst.n = n;
  inst.edges = std::move(edges);
  inst.clusters = std::move(clusters);
  inst.source = static_cast<Vertex>(rng.uniform(0, n - 1));
  inst.weighted = max_weight.has_value();
  return normalize_instance(std::move(inst));
}

}  // namespace clustree
