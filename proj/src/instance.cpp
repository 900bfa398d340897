#include "clustree/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace clustree {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::VertexCount: return "vertex count";
    case ViolationKind::SourceOutOfRange: return "source out of range";
    case ViolationKind::VertexOutOfRange: return "vertex out of range";
    case ViolationKind::EmptyCluster: return "empty cluster";
    case ViolationKind::OverlappingClusters: return "overlapping clusters";
    case ViolationKind::UncoveredVertex: return "uncovered vertex";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::DuplicateEdge: return "duplicate edge";
    case ViolationKind::NegativeWeight: return "negative weight";
    case ViolationKind::NonUnitWeight: return "non-unit weight";
    case ViolationKind::DisconnectedCluster: return "disconnected cluster";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  bool first = true;
  for (const auto* list : {&structural, &disconnected_clusters}) {
    for (const auto& v : *list) {
      if (!first) os << "; ";
      os << v.message;
      first = false;
    }
  }
  return os.str();
}

namespace {

std::string format_cluster(const std::vector<Vertex>& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ValidationReport validate_instance(const ClusteredInstance& inst) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg) {
    report.structural.push_back({kind, std::move(msg)});
  };

  if (inst.n < 1) {
    add(ViolationKind::VertexCount, "instance must have at least one vertex");
    return report;
  }
  const auto n = static_cast<std::size_t>(inst.n);
  auto in_range = [&](Vertex v) { return v >= 0 && v < inst.n; };

  if (!in_range(inst.source))
    add(ViolationKind::SourceOutOfRange, "source " + std::to_string(inst.source) + " out of range");

  std::vector<int> owner(n, -1);
  for (std::size_t ci = 0; ci < inst.clusters.size(); ++ci) {
    const auto& c = inst.clusters[ci];
    if (c.empty()) add(ViolationKind::EmptyCluster, "cluster " + std::to_string(ci) + " is empty");
    for (Vertex v : c) {
      if (!in_range(v)) {
        add(ViolationKind::VertexOutOfRange, "vertex out of range: " + std::to_string(v) +
                                                 " in cluster " + std::to_string(ci));
        continue;
      }
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o != -1) {
        add(ViolationKind::OverlappingClusters,
            "overlapping clusters: vertex " + std::to_string(v) + " in clusters " +
                std::to_string(o) + " and " + std::to_string(ci));
        continue;
      }
      o = static_cast<int>(ci);
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner[v] == -1)
      add(ViolationKind::UncoveredVertex, "vertex " + std::to_string(v) + " belongs to no cluster");

  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t ei = 0; ei < inst.edges.size(); ++ei) {
    const Edge& e = inst.edges[ei];
    const std::string where = "edge " + std::to_string(ei) + " (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")";
    if (!in_range(e.u) || !in_range(e.v)) {
      add(ViolationKind::VertexOutOfRange, "vertex out of range: " + where);
      continue;
    }
    if (e.u == e.v) add(ViolationKind::SelfLoop, "self-loop: " + where);
    if (e.w < 0) add(ViolationKind::NegativeWeight, "negative weight: " + where);
    if (!inst.weighted && e.w != 1)
      add(ViolationKind::NonUnitWeight, "non-unit weight in unweighted instance: " + where);
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      add(ViolationKind::DuplicateEdge, "duplicate edge: " + where);
  }
  if (!report.structural.empty()) return report;

  // Connectivity of each induced cluster subgraph.
  std::vector<int> dsu(n);
  std::iota(dsu.begin(), dsu.end(), 0);
  for (const Edge& e : inst.edges) {
    if (owner[static_cast<std::size_t>(e.u)] != owner[static_cast<std::size_t>(e.v)]) continue;
    dsu[static_cast<std::size_t>(find_root(dsu, e.u))] = find_root(dsu, e.v);
  }
  for (const auto& c : inst.clusters) {
    const int r = find_root(dsu, c.front());
    for (Vertex v : c) {
      if (find_root(dsu, v) != r) {
        report.disconnected_clusters.push_back(
            {ViolationKind::DisconnectedCluster,
             "cluster " + format_cluster(c) + " induces disconnected subgraph"});
        break;
      }
    }
  }
  return report;
}

void require_structurally_valid(const ClusteredInstance& inst) {
  const auto report = validate_instance(inst);
  if (!report.structurally_valid()) throw InvalidInput(report.structural.front().message);
}

ClusteredInstance normalize_instance(ClusteredInstance inst) {
  for (Edge& e : inst.edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::stable_sort(inst.edges.begin(), inst.edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (auto& c : inst.clusters) std::sort(c.begin(), c.end());
  std::stable_sort(inst.clusters.begin(), inst.clusters.end(),
                   [](const auto& a, const auto& b) {
                     if (a.empty() || b.empty()) return a.empty() && !b.empty();
                     return a.front() < b.front();
                   });
  return inst;
}

bool is_normalized(const ClusteredInstance& inst) { return normalize_instance(inst) == inst; }

std::vector<int> cluster_membership(const ClusteredInstance& inst) {
  std::vector<int> owner(static_cast<std::size_t>(std::max(inst.n, 0)), -1);
  for (std::size_t ci = 0; ci < inst.clusters.size(); ++ci)
    for (Vertex v : inst.clusters[ci])
      if (v >= 0 && v < inst.n) owner[static_cast<std::size_t>(v)] = static_cast<int>(ci);
  return owner;
}

}  // namespace clustree
