#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "clustree/instance.hpp"
#include "clustree/random.hpp"

namespace clustree {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;
  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  bool operator==(const CnfFormula&) const = default;
};

/// Throws InvalidInput for a variable index outside [0, num_vars).
void validate_formula(const CnfFormula& phi);

/// (±x1 ∨ ±x2 ∨ ±x3) for all eight sign patterns.
CnfFormula all_patterns_formula();

CnfFormula random_3cnf(Rng& rng, int num_vars, int num_clauses);

struct X3cInstance {
  int eta = 0;  // 3η items, 0-based
  std::vector<std::array<int, 3>> sets;
  bool operator==(const X3cInstance&) const = default;

  int num_items() const { return 3 * eta; }
  int num_sets() const { return static_cast<int>(sets.size()); }
  /// ℓ_i for every item.
  std::vector<int> occurrences() const;
};

/// Sets must hold three distinct in-range items; no item may occur in more
/// than three sets. Items that occur nowhere are accepted.
void validate_x3c(const X3cInstance& x);

/// Random set system with eta ≤ num_sets ≤ 3·eta; with plant_cover the
/// first eta sets (before shuffling) partition the items.
X3cInstance random_x3c(Rng& rng, int eta, int num_sets, bool plant_cover);

enum class GadgetKind { ClubfsSat, ClusptSat, CluspX3c };
std::string to_string(GadgetKind kind);

struct GadgetCertificate {
  ClusteredInstance instance;
  GadgetKind kind = GadgetKind::ClubfsSat;
  int eta = 0;
  int mu = 0;
  int big_m = 0;  // 0 where the construction has no M
  Cost sat_threshold = 0;
  Cost unsat_threshold = 0;
  std::variant<CnfFormula, X3cInstance> source_problem;
  Vertex s = 0;
  Vertex t = -1;  // CluSP target, -1 for tree gadgets
  std::string note;
};

GadgetCertificate gen_clubfs_from_3cnf(const CnfFormula& phi);
GadgetCertificate gen_cluspt_from_3cnf(const CnfFormula& phi, int big_m);
/// Requires num_sets ≥ eta.
GadgetCertificate gen_clusp_from_x3c(const X3cInstance& x, int big_m);

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> assignment;  // x_i = assignment[i]
};

inline constexpr int kSatVarLimit = 24;
SatResult sat_bruteforce(const CnfFormula& phi);

struct X3cResult {
  bool solvable = false;
  std::vector<int> cover;  // set indices, ascending
};

inline constexpr int kX3cSetLimit = 20;
X3cResult x3c_bruteforce(const X3cInstance& x);

}  // namespace clustree
