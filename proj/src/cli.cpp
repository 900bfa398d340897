#include "clustree/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "clustree/approx.hpp"
#include "clustree/io.hpp"
#include "clustree/random.hpp"
#include "clustree/reductions.hpp"
#include "clustree/verify.hpp"

namespace clustree {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output) write_file(*c.output, text);
  else out << text;
}

const std::string& need_input(const RunConfig& c) {
  if (!c.input) throw UsageError("--input is required for " + c.command);
  return *c.input;
}

ClusteredInstance load_instance(const RunConfig& c) {
  auto inst = parse_instance(read_file(need_input(c)));
  if (c.source) {
    if (*c.source < 0 || *c.source >= inst.n) throw UsageError("--source out of range");
    inst.source = *c.source;
  }
  return inst;
}

Problem tree_problem(const std::string& name) {
  if (name == "clubfs") return Problem::CluBFS;
  if (name == "cluspt") return Problem::CluSPT;
  throw UsageError("unknown problem '" + name + "'");
}

Json solve_tree(const RunConfig& c, const ClusteredGraph& g, std::ostream& err) {
  const Problem problem = tree_problem(c.problem);
  if (c.solver == "approx") {
    const auto result = problem == Problem::CluBFS ? clubfs_approx(g) : cluspt_approx_mst(g);
    Json doc = solution_json(result.tree);
    if (result.certificate) doc["certificate"] = certificate_json(*result.certificate);
    return doc;
  }
  if (c.solver == "fpt1") {
    Fpt1Options o;
    o.threads = c.threads;
    if (c.fast_convolution) o.convolution = ConvolutionMethod::Ranked;
    const auto result = fpt1_solve(g, problem, o);
    if (c.dp_trace) {
      std::ofstream trace(*c.dp_trace);
      if (!trace) throw UsageError("cannot write " + *c.dp_trace);
      write_dp_trace(trace, result.table);
    }
    return solution_json(result.tree);
  }
  if (c.solver == "fpt2") {
    Fpt2Options o;
    o.threads = c.threads;
    o.full_roots = c.full_roots;
    return solution_json(fpt2_solve(g, problem, o).tree);
  }
  if (c.solver == "oracle") {
    if (problem == Problem::CluBFS && g.weighted()) throw InvalidInput("clubfs requires an unweighted instance");
    const std::int64_t subsets = binomial(g.m(), g.n() - 1);
    if (subsets > c.oracle_budget)
      throw UsageError("instance too large for oracle: C(" + std::to_string(g.m()) + ", " + std::to_string(g.n() - 1) +
                       ") = " + std::to_string(subsets) + " exceeds budget " + std::to_string(c.oracle_budget));
    const auto result = oracle_spanning_trees(g, c.oracle_budget);
    if (!result.feasible) throw InfeasibleInstance("no spanning tree keeps every cluster connected");
    err << "examined " << result.trees_examined << " spanning trees\n";
    return solution_json(result.tree);
  }
  throw UsageError("solver '" + c.solver + "' does not solve " + c.problem);
}

Json solve_path(const RunConfig& c, const ClusteredGraph& g) {
  if (!c.target) throw UsageError("--target is required for clusp");
  const Vertex s = g.source();
  const Vertex t = *c.target;
  if (t < 0 || t >= g.n()) throw UsageError("--target out of range");
  if (c.solver == "clusp-dp") return path_json(clusp_exact_dp(g, s, t, {.bit_budget = c.bit_budget}));
  if (c.solver == "oracle") return path_json(clusp_oracle_paths(g, s, t));
  throw UsageError("solver '" + c.solver + "' does not solve clusp");
}

int cmd_solve(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RunConfig conf = c;
  if (conf.solver == "clusp-dp") conf.problem = "clusp";
  const ClusteredGraph g(load_instance(conf));
  const Json doc = conf.problem == "clusp" ? solve_path(conf, g) : solve_tree(conf, g, err);
  emit(conf, out, doc.dump() + "\n");
  return kExitOk;
}

int cmd_gen(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.kind == "random") {
    const auto inst = gen_random_clustered(c.seed, c.n, c.m, c.k, c.max_weight, !c.allow_infeasible);
    emit(c, out, serialize_instance(inst));
    return kExitOk;
  }
  if (c.kind == "cnf") {
    Rng rng(c.seed);
    emit(c, out, write_dimacs(random_3cnf(rng, c.eta, c.mu)));
    return kExitOk;
  }
  if (c.kind == "x3c") {
    Rng rng(c.seed);
    emit(c, out, write_x3c(random_x3c(rng, c.eta, c.mu, c.plant)));
    return kExitOk;
  }
  GadgetCertificate cert;
  if (c.kind == "clubfs") cert = gen_clubfs_from_3cnf(parse_dimacs(read_file(need_input(c))));
  else if (c.kind == "cluspt") cert = gen_cluspt_from_3cnf(parse_dimacs(read_file(need_input(c))), c.big_m.value_or(20));
  else if (c.kind == "clusp") cert = gen_clusp_from_x3c(parse_x3c(read_file(need_input(c))), c.big_m.value_or(40));
  else throw UsageError("unknown generator '" + c.kind + "'");

  emit(c, out, serialize_instance(cert.instance));
  std::optional<std::string> sidecar = c.certificate;
  if (!sidecar && c.output) sidecar = *c.output + ".cert.json";
  const std::string text = gadget_json(cert).dump(2) + "\n";
  if (sidecar) write_file(*sidecar, text);
  else err << text;
  return kExitOk;
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  o.seed = c.seed;
  o.threads = c.threads;
  o.oracle_budget = c.oracle_budget;
  o.only = parse_suite_selection(c.only);
  o.max_eta = c.eta;
  o.max_mu = c.mu;
  o.corrupt_approx = c.corrupt_approx;
  o.fast_convolution = c.fast_convolution;
  return o;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const VerifyOptions options = verify_options(c);
  Json report;
  report["seed"] = c.seed;
  report["criteria"] = Json::array();
  bool all = true;
  for (int id : selected_criteria(options)) {
    const auto r = run_criterion(id, options);
    err << r.line() << "\n";
    for (const auto& check : r.checks)
      if (!check.pass) err << "    FAIL " << check.subject << ": " << check.claim << "\n";
    Json entry;
    entry["id"] = r.id;
    entry["title"] = r.title;
    entry["pass"] = r.pass();
    entry["checks"] = Json::array();
    for (const auto& check : r.checks)
      entry["checks"].push_back({{"subject", check.subject}, {"claim", check.claim}, {"pass", check.pass}});
    report["criteria"].push_back(std::move(entry));
    all = all && r.pass();
  }
  report["pass"] = all;
  emit(c, out, report.dump(1) + "\n");
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.input) {
    RunConfig conf = c;
    conf.only = "bench";
    return cmd_verify(conf, out, err);
  }
  RunConfig conf = c;
  conf.output.reset();
  std::ostringstream sink;
  const auto start = std::chrono::steady_clock::now();
  const int code = cmd_solve(conf, sink, err);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json doc;
  doc["solver"] = c.solver;
  doc["problem"] = c.solver == "clusp-dp" ? "clusp" : c.problem;
  doc["seconds"] = secs;
  doc["result"] = Json::parse(sink.str());
  emit(c, out, doc.dump() + "\n");
  return code;
}

int cmd_export_dot(const RunConfig& c, std::ostream& out) {
  const auto inst = load_instance(c);
  std::optional<SpanningTreeSolution> tree;
  if (c.solution) {
    const Json doc = Json::parse(read_file(*c.solution));
    SpanningTreeSolution t;
    t.parent = doc.at("parent").get<std::vector<Vertex>>();
    if (static_cast<int>(t.parent.size()) != inst.n) throw UsageError("solution does not match instance size");
    tree = std::move(t);
  }
  emit(c, out, export_dot(inst, tree ? &*tree : nullptr));
  return kExitOk;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "solve") return cmd_solve(config, out, err);
    if (config.command == "gen") return cmd_gen(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "bench") return cmd_bench(config, out, err);
    if (config.command == "export-dot") return cmd_export_dot(config, out);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const InfeasibleInstance& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const GraphDisconnected& e) {
    err << "error: infeasible instance: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace clustree
