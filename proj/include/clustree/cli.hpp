#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "clustree/core.hpp"
#include "clustree/exact.hpp"

namespace clustree {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitBudget = 3,
  kExitVerifyFailed = 4,
};

struct RunConfig {
  std::string command;  // gen | solve | verify | bench | export-dot

  std::optional<std::string> input;
  std::optional<std::string> output;
  std::string solver = "fpt2";   // approx | fpt1 | fpt2 | oracle | clusp-dp
  std::string problem = "clubfs";  // clubfs | cluspt | clusp
  std::uint64_t seed = 1;
  int threads = 1;
  std::int64_t oracle_budget = kDefaultOracleBudget;
  int bit_budget = 25;
  bool full_roots = false;
  bool fast_convolution = false;
  std::optional<Vertex> source;
  std::optional<Vertex> target;
  std::optional<std::string> dp_trace;

  // gen
  std::string kind;  // random | cnf | x3c | clubfs | cluspt | clusp
  int n = 10;
  int m = 14;
  int k = 4;
  std::optional<Weight> max_weight;
  bool allow_infeasible = false;
  int eta = 3;
  int mu = 8;
  bool plant = false;
  std::optional<int> big_m;
  std::optional<std::string> certificate;

  // verify
  std::string only;
  bool corrupt_approx = false;

  // export-dot
  std::optional<std::string> solution;
};

/// Executes one command. Results go to out (or the output file), diagnostics
/// to err. Returns the process exit code.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace clustree
