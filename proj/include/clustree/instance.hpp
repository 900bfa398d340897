#pragma once

#include <string>
#include <vector>

#include "clustree/core.hpp"

namespace clustree {

/// A graph G = (V, E, w), a partition of V into clusters and a source vertex.
///
/// Vertices are 0..n-1. Instances produced by this library are kept in
/// canonical form (see normalize_instance), which fixes edge ids and
/// cluster indices and therefore every deterministic tie-break.
struct ClusteredInstance {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> clusters;
  Vertex source = 0;
  bool weighted = false;

  int num_clusters() const { return static_cast<int>(clusters.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const ClusteredInstance&, const ClusteredInstance&) = default;
};

enum class ViolationKind {
  VertexCount,
  SourceOutOfRange,
  VertexOutOfRange,
  EmptyCluster,
  OverlappingClusters,
  UncoveredVertex,
  SelfLoop,
  DuplicateEdge,
  NegativeWeight,
  NonUnitWeight,
  DisconnectedCluster,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  /// Partition and edge-list problems; any of these makes the instance unusable.
  std::vector<Violation> structural;
  /// Clusters whose induced subgraph is disconnected. CluSP instances may
  /// have these; tree problems are then infeasible.
  std::vector<Violation> disconnected_clusters;

  bool structurally_valid() const { return structural.empty(); }
  bool ok() const { return structural.empty() && disconnected_clusters.empty(); }
  std::string summary() const;
};

ValidationReport validate_instance(const ClusteredInstance& inst);

/// Throws InvalidInput carrying the first structural violation.
void require_structurally_valid(const ClusteredInstance& inst);

/// Canonical form: every edge stored with u < v, edges sorted by (u, v),
/// each cluster sorted ascending and clusters sorted by smallest member.
ClusteredInstance normalize_instance(ClusteredInstance inst);

bool is_normalized(const ClusteredInstance& inst);

/// cluster index of each vertex; -1 for vertices no cluster covers.
std::vector<int> cluster_membership(const ClusteredInstance& inst);

}  // namespace clustree
