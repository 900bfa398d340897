#include <algorithm>
#include <deque>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

#include "clustree/exact.hpp"

namespace clustree {

namespace {

struct State {
  Vertex v = 0;
  std::uint64_t departed = 0;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = s.departed * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(s.v) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct Label {
  Cost dist = kInfinity;
  State parent{-1, 0};
  bool settled = false;
};

// Bit positions are handed out the first time a cluster is departed.
class BitAssigner {
 public:
  explicit BitAssigner(int k) : bit_(static_cast<std::size_t>(k), -1) {}
  int bit(int cluster) {
    int& b = bit_[static_cast<std::size_t>(cluster)];
    if (b < 0) {
      if (next_ == 64) throw BudgetExceeded("clustered path search touched more than 64 clusters");
      b = next_++;
    }
    return b;
  }
  int lookup(int cluster) const { return bit_[static_cast<std::size_t>(cluster)]; }

 private:
  std::vector<int> bit_;
  int next_ = 0;
};

}  // namespace

ClusteredPath clusp_exact_dp(const ClusteredGraph& g, Vertex s, Vertex t, const CluspOptions& options) {
  if (s < 0 || s >= g.n() || t < 0 || t >= g.n()) throw InvalidInput("endpoint out of range");
  int nontrivial = 0;
  for (int c = 0; c < g.k(); ++c) nontrivial += g.cluster_size(c) > 1 ? 1 : 0;
  if (nontrivial > options.bit_budget)
    throw BudgetExceeded(std::to_string(nontrivial) + " non-singleton clusters exceed bit budget " +
                         std::to_string(options.bit_budget));

  BitAssigner bits(g.k());
  std::unordered_map<State, Label, StateHash> labels;
  const State start{s, 0};
  labels[start].dist = 0;

  // Returns the successor state of crossing u -> v, or nullopt if v's
  // cluster has already been left.
  auto step = [&](const State& from, Vertex to) -> std::optional<State> {
    const int cu = g.cluster_of(from.v);
    const int cv = g.cluster_of(to);
    if (cu == cv) return State{to, from.departed};
    const int bv = bits.lookup(cv);
    if (bv >= 0 && ((from.departed >> bv) & 1U)) return std::nullopt;
    return State{to, from.departed | (std::uint64_t{1} << bits.bit(cu))};
  };

  std::optional<State> goal;
  if (!g.weighted()) {
    std::deque<State> queue{start};
    labels[start].settled = true;
    while (!queue.empty() && !goal) {
      const State cur = queue.front();
      queue.pop_front();
      if (cur.v == t) {
        goal = cur;
        break;
      }
      const Cost d = labels[cur].dist;
      for (const Arc& a : g.neighbors(cur.v)) {
        const auto next = step(cur, a.to);
        if (!next) continue;
        Label& lab = labels[*next];
        if (lab.settled) continue;
        lab = Label{d + 1, cur, true};
        queue.push_back(*next);
      }
    }
  } else {
    using Entry = std::tuple<Cost, Vertex, std::uint64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(0, s, 0);
    while (!heap.empty()) {
      const auto [d, v, dep] = heap.top();
      heap.pop();
      const State cur{v, dep};
      Label& here = labels[cur];
      if (here.settled || d > here.dist) continue;
      here.settled = true;
      if (v == t) {
        goal = cur;
        break;
      }
      for (const Arc& a : g.neighbors(v)) {
        const auto next = step(cur, a.to);
        if (!next) continue;
        Label& lab = labels[*next];
        const Cost nd = sat_add(d, a.w);
        if (lab.settled || nd >= lab.dist) continue;
        lab.dist = nd;
        lab.parent = cur;
        heap.emplace(nd, next->v, next->departed);
      }
    }
  }

  ClusteredPath result;
  if (!goal) return result;
  result.length = labels[*goal].dist;
  for (State cur = *goal; cur.v >= 0; cur = labels[cur].parent) {
    result.vertices.push_back(cur.v);
    if (cur == start) break;
  }
  std::reverse(result.vertices.begin(), result.vertices.end());
  return result;
}

}  // namespace clustree
