#include <iostream>

#include "CLI11.hpp"

#include "clustree/cli.hpp"

int main(int argc, char** argv) {
  using clustree::RunConfig;
  RunConfig c;
  CLI::App app{"clustered shortest-path tree solvers, gadget generators and verification suites"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", c.input, "input file");
    sub->add_option("--output", c.output, "output file (default: stdout)");
    sub->add_option("--seed", c.seed, "seed for every random choice");
    sub->add_option("--threads", c.threads, "solver threads")->check(CLI::PositiveNumber);
  };
  auto solver_flags = [&](CLI::App* sub) {
    sub->add_option("--solver", c.solver, "approx | fpt1 | fpt2 | oracle | clusp-dp")
        ->check(CLI::IsMember({"approx", "fpt1", "fpt2", "oracle", "clusp-dp"}));
    sub->add_option("--problem", c.problem, "clubfs | cluspt | clusp")
        ->check(CLI::IsMember({"clubfs", "cluspt", "clusp"}));
    sub->add_option("--oracle-budget", c.oracle_budget, "largest C(m, n-1) the oracle enumerates");
    sub->add_option("--bit-budget", c.bit_budget, "largest number of non-singleton clusters for clusp-dp");
    sub->add_flag("--full-roots", c.full_roots, "fpt2: try every cluster vertex as root");
    sub->add_flag("--fast-convolution", c.fast_convolution, "fpt1: ranked subset convolution");
    sub->add_option("--source", c.source, "override the source vertex");
    sub->add_option("--target", c.target, "clusp target vertex");
  };

  auto* solve = app.add_subcommand("solve", "solve an instance");
  common(solve);
  solver_flags(solve);
  solve->add_option("--dp-trace", c.dp_trace, "fpt1: write the DP table to this file");

  auto* gen = app.add_subcommand("gen", "generate instances, formulas and gadgets");
  common(gen);
  gen->add_option("kind", c.kind, "random | cnf | x3c | clubfs | cluspt | clusp")
      ->required()
      ->check(CLI::IsMember({"random", "cnf", "x3c", "clubfs", "cluspt", "clusp"}));
  gen->add_option("--n", c.n, "vertices");
  gen->add_option("--m", c.m, "edges");
  gen->add_option("--k", c.k, "clusters");
  gen->add_option("--max-weight", c.max_weight, "make the instance weighted with weights 0..W");
  gen->add_flag("--allow-infeasible", c.allow_infeasible, "skip the cluster and quotient spanning trees");
  gen->add_option("--eta", c.eta, "variables (cnf) or items/3 (x3c)");
  gen->add_option("--mu", c.mu, "clauses (cnf) or sets (x3c)");
  gen->add_flag("--plant", c.plant, "x3c: plant an exact cover");
  gen->add_option("--M", c.big_m, "gadget path length (default 20 for cluspt, 40 for clusp)");
  gen->add_option("--certificate", c.certificate, "certificate file (default: OUTPUT.cert.json)");

  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  common(verify);
  verify->add_option("--only", c.only, "comma list of suites or criterion numbers");
  verify->add_option("--eta", c.eta, "largest sampled variable count");
  verify->add_option("--mu", c.mu, "largest sampled clause count");
  verify->add_option("--oracle-budget", c.oracle_budget, "largest C(m, n-1) the oracle enumerates");
  verify->add_flag("--fast-convolution", c.fast_convolution, "fpt1: ranked subset convolution");
  verify->add_flag("--corrupt-approx", c.corrupt_approx, "test hook: inflate approximation costs");

  auto* bench = app.add_subcommand("bench", "time a solver, or run the smoke benchmarks");
  common(bench);
  solver_flags(bench);

  auto* dot = app.add_subcommand("export-dot", "write the instance as DOT");
  common(dot);
  dot->add_option("--solution", c.solution, "solution JSON whose tree edges are drawn bold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? clustree::kExitOk : clustree::kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  return clustree::run_command(c, std::cout, std::cerr);
}
