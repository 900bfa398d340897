#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clustree/exact.hpp"

namespace clustree {

/// One checked statement with the concrete numbers behind it.
struct Check {
  std::string subject;  // e.g. "seed=17 n=9 m=12 k=3"
  std::string claim;    // e.g. "cost 14 <= 2*2*OPT = 40"
  bool pass = false;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const;
  int failures() const;
  /// "PASS criterion 2: fixture optima (6/6 checks, 0.01s)"
  std::string line() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  std::int64_t oracle_budget = kDefaultOracleBudget;
  /// Restrict to these criteria (1..8); empty runs all.
  std::set<int> only;
  /// Upper bounds for sampled formulas in the gadget suites.
  int max_eta = 3;
  int max_mu = 8;
  /// Test hook: inflate the approximation cost by 2γ+1 before checking it.
  bool corrupt_approx = false;
  /// Run the ranked convolution inside fpt1 as well.
  bool fast_convolution = false;
};

/// Criterion numbers named by a --only token: a number, "agreement",
/// "fixtures", "gadgets", "clubfs", "cluspt", "clusp", "approx",
/// "oracles", "bench". Throws InvalidInput on unknown names.
std::set<int> parse_suite_selection(const std::string& list);

CriterionReport verify_solver_agreement(const VerifyOptions& options);  // 1
CriterionReport verify_fixtures(const VerifyOptions& options);          // 2
CriterionReport verify_clubfs_gadgets(const VerifyOptions& options);    // 3
CriterionReport verify_cluspt_gadgets(const VerifyOptions& options);    // 4
CriterionReport verify_clusp_gadgets(const VerifyOptions& options);     // 5
CriterionReport verify_approximation(const VerifyOptions& options);     // 6
CriterionReport verify_mst_and_paths(const VerifyOptions& options);     // 7
CriterionReport verify_benchmarks(const VerifyOptions& options);        // 8

CriterionReport run_criterion(int id, const VerifyOptions& options);
std::vector<int> selected_criteria(const VerifyOptions& options);
std::vector<CriterionReport> run_verification(const VerifyOptions& options);

/// The random instances of criterion 1 (n ≤ 10, m ≤ 14, k ≤ 4; odd
/// indices weighted with weights 0..4).
struct SuiteInstance {
  std::uint64_t seed = 0;
  ClusteredInstance instance;
};
std::vector<SuiteInstance> agreement_suite(std::uint64_t base_seed, int count = 200);

}  // namespace clustree
