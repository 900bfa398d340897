#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clustree/graph.hpp"
#include "clustree/rational.hpp"

namespace clustree {

/// The three candidate ratios 4nk/γ, 4n²/γ², 2γ, their minimum ρ, and the
/// lower bound on the optimum induced by a diametral path of length γ.
struct RatioCertificate {
  Cost gamma = 0;
  int n = 0;
  int k = 0;
  /// false when γ = 0: every term degenerates and no ratio is certified.
  bool applicable = false;
  std::array<Rational, 3> terms{};
  Rational rho{};
  /// γ²/4 + γ/2 (γ even) or γ²/4 + γ/2 + 1/4 (γ odd); always an integer.
  Cost lower_bound = 0;
  std::string note;
};

RatioCertificate ratio_bound(int n, int k, Cost gamma);
RatioCertificate ratio_bound(const ClusteredGraph& g);

struct ApproxResult {
  SpanningTreeSolution tree;
  Cost gamma = 0;
  Weight weight = 0;  // Σ of tree edge weights
  /// Present for the CluBFS algorithm; the CluSPT algorithm is an
  /// n-approximation and carries no γ-based certificate.
  std::optional<RatioCertificate> certificate;
};

/// Cluster-contraction BFS approximation for unweighted instances.
/// Throws InvalidInput on weighted instances, InfeasibleInstance when a
/// cluster or the quotient graph is disconnected.
ApproxResult clubfs_approx(const ClusteredGraph& g);

struct ClusteredMst {
  std::vector<int> edges;  // edge ids, ascending
  Weight weight = 0;
};

/// Minimum-weight spanning tree among the cluster-feasible ones: an MST of
/// every cluster plus an MST of the contracted graph, where parallel
/// quotient edges are reduced to the lightest one (smallest id on ties).
ClusteredMst clustered_mst(const ClusteredGraph& g);

/// n-approximation for CluSPT built on clustered_mst.
ApproxResult cluspt_approx_mst(const ClusteredGraph& g);

}  // namespace clustree
