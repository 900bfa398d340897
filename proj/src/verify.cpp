#include "clustree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "clustree/approx.hpp"
#include "clustree/random.hpp"
#include "clustree/reductions.hpp"

namespace clustree {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent seed streams per criterion.
std::uint64_t derive(std::uint64_t base, int stream, int index) {
  return splitmix(splitmix(base) ^ splitmix((static_cast<std::uint64_t>(stream) << 32) | static_cast<std::uint32_t>(index)));
}

std::string num(Cost c) { return c >= kInfinity ? std::string("INF") : std::to_string(c); }

std::string describe(const std::string& label, const ClusteredInstance& inst) {
  std::ostringstream out;
  out << label << " n=" << inst.n << " m=" << inst.num_edges() << " k=" << inst.num_clusters()
      << (inst.weighted ? " weighted" : " unweighted");
  return out.str();
}

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Problem problem_of(const ClusteredGraph& g) { return g.weighted() ? Problem::CluSPT : Problem::CluBFS; }

Fpt1Options fpt1_options(const VerifyOptions& o) {
  Fpt1Options f;
  f.threads = o.threads;
  if (o.fast_convolution) f.convolution = ConvolutionMethod::Ranked;
  return f;
}

Fpt2Options fpt2_options(const VerifyOptions& o) {
  Fpt2Options f;
  f.threads = o.threads;
  return f;
}

// Runs body, turning a library error into a failed check.
void guarded(CriterionReport& r, const std::string& subject, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    r.checks.push_back({subject, std::string("error: ") + e.what(), false});
  }
}

void witness_check(CriterionReport& r, const std::string& subject, const char* who, const ClusteredGraph& g,
                   const SpanningTreeSolution& tree, Cost opt) {
  Cost recomputed = -1;
  bool feasible = false;
  try {
    recomputed = broadcast_cost(g, tree);
    feasible = is_feasible_tree(g, tree);
  } catch (const Error&) {
  }
  std::ostringstream claim;
  claim << who << " witness feasible=" << (feasible ? "yes" : "no") << " recomputed cost " << recomputed
        << " == " << opt;
  r.checks.push_back({subject, claim.str(), feasible && recomputed == opt});
}

CnfFormula single_clause() {
  CnfFormula phi;
  phi.num_vars = 3;
  phi.clauses = {{Literal{0, false}, Literal{1, false}, Literal{2, false}}};
  return phi;
}

std::vector<std::pair<std::string, CnfFormula>> sampled_formulas(const VerifyOptions& o, int stream, int count) {
  std::vector<std::pair<std::string, CnfFormula>> out;
  out.emplace_back("all-patterns", all_patterns_formula());
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = derive(o.seed, stream, i);
    Rng rng(seed);
    const int eta = static_cast<int>(rng.uniform(1, std::max(1, o.max_eta)));
    const int mu = static_cast<int>(rng.uniform(1, std::max(1, o.max_mu)));
    out.emplace_back("formula seed=" + std::to_string(seed), random_3cnf(rng, eta, mu));
  }
  return out;
}

}  // namespace

bool CriterionReport::pass() const { return failures() == 0 && !checks.empty(); }

int CriterionReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string CriterionReport::line() const {
  std::ostringstream out;
  out << (pass() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ("
      << checks.size() - static_cast<std::size_t>(failures()) << "/" << checks.size() << " checks, "
      << seconds_str(seconds) << ")";
  return out.str();
}

std::set<int> parse_suite_selection(const std::string& list) {
  std::set<int> out;
  std::istringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "agreement") out.insert(1);
    else if (token == "fixtures") out.insert(2);
    else if (token == "gadgets") out.insert({3, 4, 5});
    else if (token == "clubfs") out.insert(3);
    else if (token == "cluspt") out.insert(4);
    else if (token == "clusp") out.insert(5);
    else if (token == "approx") out.insert(6);
    else if (token == "oracles") out.insert(7);
    else if (token == "bench") out.insert(8);
    else if (token.size() == 1 && token[0] >= '1' && token[0] <= '8') out.insert(token[0] - '0');
    else throw InvalidInput("unknown suite '" + token + "'");
  }
  return out;
}

std::vector<SuiteInstance> agreement_suite(std::uint64_t base_seed, int count) {
  std::vector<SuiteInstance> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = derive(base_seed, 1, i);
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(5, 10));
    const int k = static_cast<int>(rng.uniform(1, 4));
    const int m = static_cast<int>(rng.uniform(n - 1, std::min(14, n * (n - 1) / 2)));
    const auto weight = i % 2 == 1 ? std::optional<Weight>(4) : std::nullopt;
    out.push_back({seed, gen_random_clustered(seed, n, m, k, weight, true)});
  }
  return out;
}

CriterionReport verify_solver_agreement(const VerifyOptions& o) {
  CriterionReport r{1, "exact solver agreement", {}, 0};
  const auto start = Clock::now();
  for (const auto& item : agreement_suite(o.seed)) {
    const std::string subject = describe("seed=" + std::to_string(item.seed), item.instance);
    guarded(r, subject, [&] {
      const ClusteredGraph g(item.instance);
      const auto orc = oracle_spanning_trees(g, o.oracle_budget);
      const auto f1 = fpt1_solve(g, problem_of(g), fpt1_options(o));
      const auto f2 = fpt2_solve(g, problem_of(g), fpt2_options(o));
      std::ostringstream claim;
      claim << "fpt1=" << num(f1.opt) << " fpt2=" << num(f2.opt) << " oracle=" << num(orc.opt);
      r.checks.push_back({subject, claim.str(), orc.feasible && f1.opt == orc.opt && f2.opt == orc.opt});
      witness_check(r, subject, "fpt1", g, f1.tree, orc.opt);
      witness_check(r, subject, "fpt2", g, f2.tree, orc.opt);
      witness_check(r, subject, "oracle", g, orc.tree, orc.opt);
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_fixtures(const VerifyOptions& o) {
  CriterionReport r{2, "fixture optima", {}, 0};
  const auto start = Clock::now();

  ClusteredInstance p6;
  p6.n = 6;
  p6.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}};
  p6.clusters = {{0, 1, 2}, {3, 4, 5}};
  ClusteredInstance path4;
  path4.n = 4;
  path4.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  path4.clusters = {{0, 1}, {2, 3}};

  for (const auto& [name, inst, want] :
       {std::tuple{"P6", p6, Cost{10}}, std::tuple{"PATH4", path4, Cost{6}}}) {
    guarded(r, name, [&] {
      const ClusteredGraph g(normalize_instance(inst));
      const Cost a = fpt1_solve(g, Problem::CluBFS, fpt1_options(o)).opt;
      const Cost b = fpt2_solve(g, Problem::CluBFS, fpt2_options(o)).opt;
      const Cost c = oracle_spanning_trees(g, o.oracle_budget).opt;
      r.checks.push_back({name, "fpt1 " + num(a) + " == " + num(want), a == want});
      r.checks.push_back({name, "fpt2 " + num(b) + " == " + num(want), b == want});
      r.checks.push_back({name, "oracle " + num(c) + " == " + num(want), c == want});
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_clubfs_gadgets(const VerifyOptions& o) {
  CriterionReport r{3, "CluBFS gadget dichotomy", {}, 0};
  const auto start = Clock::now();
  for (const auto& [label, phi] : sampled_formulas(o, 3, 50)) {
    const int eta = phi.num_vars;
    const int mu = static_cast<int>(phi.clauses.size());
    const std::string subject = label + " eta=" + std::to_string(eta) + " mu=" + std::to_string(mu);
    guarded(r, subject, [&] {
      const auto cert = gen_clubfs_from_3cnf(phi);
      const int n = cert.instance.n;
      const int m = cert.instance.num_edges();
      r.checks.push_back({subject, "|V| " + std::to_string(n) + " == 3mu+2eta+1 = " + std::to_string(3 * mu + 2 * eta + 1),
                          n == 3 * mu + 2 * eta + 1});
      r.checks.push_back({subject, "|E| " + std::to_string(m) + " == 6mu+3eta = " + std::to_string(6 * mu + 3 * eta),
                          m == 6 * mu + 3 * eta});
      const bool sat = sat_bruteforce(phi).satisfiable;
      const Cost opt = fpt2_solve(ClusteredGraph(cert.instance), Problem::CluBFS, fpt2_options(o)).opt;
      if (sat)
        r.checks.push_back({subject, "satisfiable: OPT " + num(opt) + " <= 3eta+8mu = " + num(cert.sat_threshold),
                            opt <= cert.sat_threshold});
      else
        r.checks.push_back({subject, "unsatisfiable: OPT " + num(opt) + " >= 3eta+8mu+3 = " + num(cert.unsat_threshold),
                            opt >= cert.unsat_threshold});
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_cluspt_gadgets(const VerifyOptions& o) {
  CriterionReport r{4, "CluSPT gadget dichotomy (M = 20)", {}, 0};
  const auto start = Clock::now();
  constexpr int kM = 20;
  auto formulas = sampled_formulas(o, 4, 20);
  formulas.emplace_back("single-clause", single_clause());
  for (const auto& [label, phi] : formulas) {
    const int eta = phi.num_vars;
    const std::string subject = label + " eta=" + std::to_string(eta) + " mu=" + std::to_string(phi.clauses.size());
    guarded(r, subject, [&] {
      const auto cert = gen_cluspt_from_3cnf(phi, kM);
      const bool sat = sat_bruteforce(phi).satisfiable;
      const Cost opt = fpt2_solve(ClusteredGraph(cert.instance), Problem::CluSPT, fpt2_options(o)).opt;
      if (sat)
        r.checks.push_back({subject, "satisfiable: OPT " + num(opt) + " == eta = " + std::to_string(eta), opt == eta});
      else
        r.checks.push_back({subject, "unsatisfiable: OPT " + num(opt) + " >= eta+M+4 = " + num(cert.unsat_threshold),
                            opt >= cert.unsat_threshold});
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_clusp_gadgets(const VerifyOptions& o) {
  CriterionReport r{5, "CluSP gadget dichotomy (M = 40)", {}, 0};
  const auto start = Clock::now();
  constexpr int kM = 40;

  std::vector<std::pair<std::string, X3cInstance>> cases;
  // Every collection of distinct triples with eta <= 2 and eta <= mu <= 3.
  for (int eta = 1; eta <= 2; ++eta) {
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < 3 * eta; ++a)
      for (int b = a + 1; b < 3 * eta; ++b)
        for (int c = b + 1; c < 3 * eta; ++c) triples.push_back({a, b, c});
    const int t = static_cast<int>(triples.size());
    for (int mu = eta; mu <= 3; ++mu) {
      std::vector<int> pick(static_cast<std::size_t>(mu));
      std::function<void(int, int)> choose = [&](int depth, int from) {
        if (depth == mu) {
          X3cInstance x;
          x.eta = eta;
          for (int idx : pick) x.sets.push_back(triples[static_cast<std::size_t>(idx)]);
          cases.emplace_back("enumerated", std::move(x));
          return;
        }
        for (int i = from; i < t; ++i) {
          pick[static_cast<std::size_t>(depth)] = i;
          choose(depth + 1, i + 1);
        }
      };
      choose(0, 0);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t seed = derive(o.seed, 5, i);
    Rng rng(seed);
    const int eta = static_cast<int>(rng.uniform(1, 3));
    // Only one distinct triple exists on three items.
    const int mu = eta == 1 ? 1 : static_cast<int>(rng.uniform(eta, 4));
    cases.emplace_back("random seed=" + std::to_string(seed), random_x3c(rng, eta, mu, rng.coin()));
  }

  for (const auto& [label, x] : cases) {
    std::ostringstream subject;
    subject << label << " eta=" << x.eta << " sets=";
    for (const auto& s : x.sets) subject << '{' << s[0] << ',' << s[1] << ',' << s[2] << '}';
    guarded(r, subject.str(), [&] {
      const auto cert = gen_clusp_from_x3c(x, kM);
      const bool solvable = x3c_bruteforce(x).solvable;
      const Cost opt = clusp_exact_dp(ClusteredGraph(cert.instance), cert.s, cert.t).length;
      const Cost bound = cert.sat_threshold;
      if (solvable) {
        r.checks.push_back({subject.str(), "solvable: OPT " + num(opt) + " <= 15mu = " + num(bound), opt <= bound});
      } else {
        r.checks.push_back({subject.str(), "unsolvable: OPT " + num(opt) + " >= M = " + num(kM), opt >= kM});
        r.checks.push_back({subject.str(), "unsolvable: OPT " + num(opt) + " > 15mu = " + num(bound), opt > bound});
      }
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_approximation(const VerifyOptions& o) {
  CriterionReport r{6, "approximation guarantees", {}, 0};
  const auto start = Clock::now();
  for (const auto& item : agreement_suite(o.seed)) {
    const std::string subject = describe("seed=" + std::to_string(item.seed), item.instance);
    guarded(r, subject, [&] {
      const ClusteredGraph g(item.instance);
      const auto orc = oracle_spanning_trees(g, o.oracle_budget);
      const Cost opt = orc.opt;
      if (!g.weighted()) {
        const auto approx = clubfs_approx(g);
        if (approx.gamma < 1) return;
        Cost cost = approx.tree.cost;
        if (o.corrupt_approx) cost *= 2 * approx.gamma + 1;
        const Cost two_gamma = 2 * approx.gamma;
        r.checks.push_back({subject,
                            "cost " + num(cost) + " <= 2gamma*OPT = " + num(two_gamma) + "*" + num(opt) + " = " +
                                num(sat_mul(two_gamma, opt)),
                            cost <= sat_mul(two_gamma, opt)});
        const Rational rho = approx.certificate->rho;
        r.checks.push_back({subject, "cost " + num(cost) + " <= rho*OPT = " + rho.str() + "*" + num(opt),
                            rho.bounds_product(cost, opt)});
      } else {
        const auto approx = cluspt_approx_mst(g);
        const Weight w_opt = tree_weight(g, orc.tree);
        r.checks.push_back({subject, "w(T~) " + num(approx.weight) + " <= w(T*) " + num(w_opt), approx.weight <= w_opt});
        r.checks.push_back({subject,
                            "cost " + num(approx.tree.cost) + " <= n*OPT = " + std::to_string(g.n()) + "*" + num(opt),
                            approx.tree.cost <= sat_mul(g.n(), opt)});
      }
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_mst_and_paths(const VerifyOptions& o) {
  CriterionReport r{7, "clustered MST and CluSP oracles", {}, 0};
  const auto start = Clock::now();
  for (const auto& item : agreement_suite(o.seed)) {
    const std::string subject = describe("seed=" + std::to_string(item.seed), item.instance);
    guarded(r, subject, [&] {
      const ClusteredGraph g(item.instance);
      const Weight mst = clustered_mst(g).weight;
      const Weight brute = oracle_spanning_trees(g, o.oracle_budget).min_weight;
      r.checks.push_back({subject, "clustered_mst " + num(mst) + " == oracle min weight " + num(brute), mst == brute});
    });
  }
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = derive(o.seed, 7, i);
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(4, 12));
    const int k = static_cast<int>(rng.uniform(1, n));
    const int m = static_cast<int>(rng.uniform(n - 1, std::min(n * (n - 1) / 2, 2 * n)));
    const bool feasible = rng.coin();
    const auto weight = i % 2 == 1 ? std::optional<Weight>(4) : std::nullopt;
    const auto inst = gen_random_clustered(seed, n, m, k, weight, feasible);
    const Vertex t = static_cast<Vertex>(rng.uniform(0, n - 1));
    const std::string subject = describe("seed=" + std::to_string(seed), inst) + " s=" +
                                std::to_string(inst.source) + " t=" + std::to_string(t);
    guarded(r, subject, [&] {
      const ClusteredGraph g(inst);
      const auto dp = clusp_exact_dp(g, g.source(), t);
      const auto brute = clusp_oracle_paths(g, g.source(), t);
      r.checks.push_back({subject, "clusp_dp " + num(dp.length) + " == path oracle " + num(brute.length),
                          dp.length == brute.length});
      if (dp.reachable()) {
        Cost len = 0;
        for (std::size_t j = 1; j < dp.vertices.size(); ++j) {
          const int id = g.find_edge(dp.vertices[j - 1], dp.vertices[j]);
          len = sat_add(len, id < 0 ? kInfinity : g.edge(id).w);
        }
        const bool ok = is_clustered_path(g, dp.vertices) && dp.vertices.front() == g.source() &&
                        dp.vertices.back() == t && len == dp.length;
        r.checks.push_back({subject, "witness is a clustered s-t path of length " + num(len), ok});
      }
    });
  }
  r.seconds = since(start);
  return r;
}

CriterionReport verify_benchmarks(const VerifyOptions& o) {
  CriterionReport r{8, "smoke benchmarks", {}, 0};
  const auto start = Clock::now();

  guarded(r, "fpt1 n=16 k=8", [&] {
    const auto inst = gen_random_clustered(derive(o.seed, 8, 0), 16, 24, 8);
    const ClusteredGraph g(inst);
    auto t0 = Clock::now();
    Fpt1Options naive = fpt1_options(o);
    naive.convolution = ConvolutionMethod::Direct;
    const auto res = fpt1_solve(g, Problem::CluBFS, naive);
    const double secs = since(t0);
    r.checks.push_back({describe("fpt1", inst),
                        "naive convolution finished in " + seconds_str(secs) + " <= 60s (OPT " + num(res.opt) + ")",
                        secs <= 60.0 && res.tree.feasible});
    if (o.fast_convolution) {
      t0 = Clock::now();
      const auto fast = fpt1_solve(g, Problem::CluBFS, fpt1_options(o));
      r.checks.push_back({describe("fpt1 ranked", inst),
                          "OPT " + num(fast.opt) + " == naive " + num(res.opt) + " in " + seconds_str(since(t0)),
                          fast.opt == res.opt});
    }
  });

  guarded(r, "fpt2 all-patterns gadget", [&] {
    const auto cert = gen_clubfs_from_3cnf(all_patterns_formula());
    const ClusteredGraph g(cert.instance);
    const std::int64_t bound = 8 * 6561;  // 2^3 * 3^8
    const std::int64_t vectors = fpt2_vector_count(g, false);
    const auto t0 = Clock::now();
    const auto res = fpt2_solve(g, Problem::CluBFS, fpt2_options(o));
    const double secs = since(t0);
    r.checks.push_back({describe("fpt2 gadget", cert.instance),
                        "k=" + std::to_string(g.k()) + " root vectors " + std::to_string(vectors) + " <= 2^3*3^8 = " +
                            std::to_string(bound),
                        vectors <= bound && g.k() == 12});
    r.checks.push_back({describe("fpt2 gadget", cert.instance),
                        "finished in " + seconds_str(secs) + " <= 60s (OPT " + num(res.opt) + ")", secs <= 60.0});
  });

  guarded(r, "ranked convolution u=10", [&] {
    Rng rng(derive(o.seed, 8, 1));
    constexpr int u = 10;
    constexpr Cost cap = 64;
    int agree = 0;
    for (int pair = 0; pair < 50; ++pair) {
      std::vector<Cost> f(1U << u), g(1U << u);
      for (auto& x : f) x = rng.uniform(0, 2 * cap);
      for (auto& x : g) x = rng.uniform(0, 2 * cap);
      agree += subset_convolution_minsum(f, g, u, cap, ConvolutionMethod::Ranked) ==
                       subset_convolution_minsum(f, g, u, cap, ConvolutionMethod::Direct)
                   ? 1
                   : 0;
    }
    r.checks.push_back({"50 random (f, g) pairs", "ranked == direct on " + std::to_string(agree) + "/50", agree == 50});
  });

  r.seconds = since(start);
  return r;
}

CriterionReport run_criterion(int id, const VerifyOptions& options) {
  using Suite = CriterionReport (*)(const VerifyOptions&);
  static constexpr Suite suites[] = {verify_solver_agreement, verify_fixtures,      verify_clubfs_gadgets,
                                     verify_cluspt_gadgets,   verify_clusp_gadgets, verify_approximation,
                                     verify_mst_and_paths,    verify_benchmarks};
  if (id < 1 || id > 8) throw InvalidInput("no criterion " + std::to_string(id));
  return suites[id - 1](options);
}

std::vector<int> selected_criteria(const VerifyOptions& options) {
  std::vector<int> ids;
  for (int id = 1; id <= 8; ++id)
    if (options.only.empty() || options.only.contains(id)) ids.push_back(id);
  return ids;
}

std::vector<CriterionReport> run_verification(const VerifyOptions& options) {
  std::vector<CriterionReport> out;
  for (int id : selected_criteria(options)) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace clustree
