#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "clustree/instance.hpp"

namespace clustree {

/// mt19937_64 with hand-rolled bounded draws: the standard distributions are
/// implementation-defined, so seeds would not reproduce across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }
  template <class T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

 private:
  std::mt19937_64 engine_;
};

/// Random clustered instance on n vertices with m edges and k clusters.
/// With max_weight set the instance is weighted with weights in
/// [0, max_weight]. With ensure_feasible every cluster gets an internal
/// spanning tree and the clusters are linked by a spanning tree before the
/// remaining edges are drawn.
ClusteredInstance gen_random_clustered(std::uint64_t seed, int n, int m, int k,
                                       std::optional<Weight> max_weight = std::nullopt,
                                       bool ensure_feasible = true);

}  // namespace clustree
