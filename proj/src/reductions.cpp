#include "clustree/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace clustree {

void validate_formula(const CnfFormula& phi) {
  if (phi.num_vars < 0) throw InvalidInput("negative variable count");
  for (std::size_t j = 0; j < phi.clauses.size(); ++j)
    for (const Literal& lit : phi.clauses[j])
      if (lit.var < 0 || lit.var >= phi.num_vars)
        throw InvalidInput("clause " + std::to_string(j) + ": variable " + std::to_string(lit.var + 1) +
                           " out of range");
}

CnfFormula all_patterns_formula() {
  CnfFormula phi;
  phi.num_vars = 3;
  for (int mask = 0; mask < 8; ++mask) {
    Clause c;
    for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = Literal{k, ((mask >> k) & 1) != 0};
    phi.clauses.push_back(c);
  }
  return phi;
}

CnfFormula random_3cnf(Rng& rng, int num_vars, int num_clauses) {
  if (num_vars < 1 || num_clauses < 0) throw InvalidInput("need at least one variable");
  CnfFormula phi;
  phi.num_vars = num_vars;
  for (int j = 0; j < num_clauses; ++j) {
    Clause c;
    for (Literal& lit : c) {
      lit.var = static_cast<int>(rng.uniform(0, num_vars - 1));
      lit.negated = rng.coin();
    }
    phi.clauses.push_back(c);
  }
  return phi;
}

std::vector<int> X3cInstance::occurrences() const {
  std::vector<int> count(static_cast<std::size_t>(num_items()), 0);
  for (const auto& set : sets)
    for (int item : set)
      if (item >= 0 && item < num_items()) ++count[static_cast<std::size_t>(item)];
  return count;
}

void validate_x3c(const X3cInstance& x) {
  if (x.eta < 0) throw InvalidInput("negative eta");
  for (std::size_t j = 0; j < x.sets.size(); ++j) {
    const auto& set = x.sets[j];
    for (int item : set)
      if (item < 0 || item >= x.num_items())
        throw InvalidInput("set " + std::to_string(j) + ": item " + std::to_string(item) + " out of range");
    if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2])
      throw InvalidInput("set " + std::to_string(j) + " repeats an item");
  }
  const auto count = x.occurrences();
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i] > 3) throw InvalidInput("item " + std::to_string(i) + " occurs in more than 3 sets");
}

X3cInstance random_x3c(Rng& rng, int eta, int num_sets, bool plant_cover) {
  const int items = 3 * eta;
  if (eta < 1 || num_sets < eta || num_sets > 3 * eta || num_sets > items * (items - 1) * (items - 2) / 6)
    throw InvalidInput("need 1 <= eta <= sets <= min(3 eta, C(3 eta, 3))");
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    X3cInstance x;
    x.eta = eta;
    std::vector<int> count(static_cast<std::size_t>(items), 0);
    auto push = [&](std::array<int, 3> set) {
      std::sort(set.begin(), set.end());
      if (std::find(x.sets.begin(), x.sets.end(), set) != x.sets.end()) return false;
      for (int item : set)
        if (count[static_cast<std::size_t>(item)] == 3) return false;
      for (int item : set) ++count[static_cast<std::size_t>(item)];
      x.sets.push_back(set);
      return true;
    };
    if (plant_cover) {
      std::vector<int> perm(static_cast<std::size_t>(items));
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      for (int j = 0; j < eta; ++j)
        push({perm[static_cast<std::size_t>(3 * j)], perm[static_cast<std::size_t>(3 * j + 1)],
              perm[static_cast<std::size_t>(3 * j + 2)]});
    }
    int misses = 0;
    while (x.num_sets() < num_sets && misses < 1000) {
      std::array<int, 3> set{};
      for (int k = 0; k < 3; ++k) set[static_cast<std::size_t>(k)] = static_cast<int>(rng.uniform(0, items - 1));
      if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2] || !push(set)) ++misses;
    }
    if (x.num_sets() < num_sets) continue;
    rng.shuffle(x.sets);
    return x;
  }
  throw InvalidInput("could not draw a set system with these parameters");
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::ClubfsSat: return "clubfs-sat";
    case GadgetKind::ClusptSat: return "cluspt-sat";
    case GadgetKind::CluspX3c: return "clusp-x3c";
  }
  return "?";
}

namespace {

Vertex literal_vertex(const Literal& lit) { return 1 + 2 * lit.var + (lit.negated ? 1 : 0); }

// Source plus the variable pairs shared by both formula gadgets.
void add_variable_part(ClusteredInstance& inst, int eta, Weight link, Weight pair) {
  inst.clusters.push_back({0});
  for (int i = 0; i < eta; ++i) {
    const Vertex pos = 1 + 2 * i;
    const Vertex neg = 2 + 2 * i;
    inst.edges.push_back({0, pos, link});
    inst.edges.push_back({0, neg, link});
    inst.edges.push_back({pos, neg, pair});
    inst.clusters.push_back({pos, neg});
  }
}

}  // namespace

GadgetCertificate gen_clubfs_from_3cnf(const CnfFormula& phi) {
  validate_formula(phi);
  const int eta = phi.num_vars;
  const int mu = static_cast<int>(phi.clauses.size());

  ClusteredInstance inst;
  inst.n = 3 * mu + 2 * eta + 1;
  inst.weighted = false;
  inst.source = 0;
  add_variable_part(inst, eta, 1, 1);
  for (int j = 0; j < mu; ++j) {
    const Vertex base = 1 + 2 * eta + 3 * j;
    inst.edges.push_back({base, base + 1, 1});
    inst.edges.push_back({base, base + 2, 1});
    inst.edges.push_back({base + 1, base + 2, 1});
    for (int k = 0; k < 3; ++k)
      inst.edges.push_back({base + k, literal_vertex(phi.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]), 1});
    inst.clusters.push_back({base, base + 1, base + 2});
  }

  GadgetCertificate cert;
  cert.instance = normalize_instance(std::move(inst));
  cert.kind = GadgetKind::ClubfsSat;
  cert.eta = eta;
  cert.mu = mu;
  cert.sat_threshold = 3 * eta + 8 * mu;
  cert.unsat_threshold = 3 * eta + 8 * mu + 3;
  cert.source_problem = phi;
  cert.s = 0;
  return cert;
}

GadgetCertificate gen_cluspt_from_3cnf(const CnfFormula& phi, int big_m) {
  validate_formula(phi);
  if (big_m < 1) throw InvalidInput("M must be positive");
  const int eta = phi.num_vars;
  const int mu = static_cast<int>(phi.clauses.size());
  const int block = 4 + big_m;

  ClusteredInstance inst;
  inst.n = 1 + 2 * eta + mu * block;
  inst.weighted = true;
  inst.source = 0;
  add_variable_part(inst, eta, 0, 1);
  for (int j = 0; j < mu; ++j) {
    const Vertex base = 1 + 2 * eta + j * block;
    const Vertex r = base + 3;
    std::vector<Vertex> cluster;
    for (int k = 0; k < 3; ++k) {
      inst.edges.push_back({base + k, r, 0});
      inst.edges.push_back({base + k, literal_vertex(phi.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]), 0});
    }
    // The M-vertex tree hanging from r_j is a path.
    for (Vertex p = r + 1; p < base + block; ++p) inst.edges.push_back({p - 1, p, 0});
    for (Vertex v = base; v < base + block; ++v) cluster.push_back(v);
    inst.clusters.push_back(std::move(cluster));
  }

  GadgetCertificate cert;
  cert.instance = normalize_instance(std::move(inst));
  cert.kind = GadgetKind::ClusptSat;
  cert.eta = eta;
  cert.mu = mu;
  cert.big_m = big_m;
  cert.sat_threshold = eta;
  cert.unsat_threshold = eta + big_m + 4;
  cert.source_problem = phi;
  cert.s = 0;
  cert.note = "tree of M vertices realised as a path hanging from r_j";
  return cert;
}

GadgetCertificate gen_clusp_from_x3c(const X3cInstance& x, int big_m) {
  validate_x3c(x);
  if (big_m < 1) throw InvalidInput("M must be positive");
  const int eta = x.eta;
  const int mu = x.num_sets();
  if (mu < eta) throw InvalidInput("gadget needs at least eta sets");

  ClusteredInstance inst;
  inst.weighted = false;
  Vertex next = 4 * mu;
  auto u = [](int j, int k) { return static_cast<Vertex>(4 * j + k); };
  for (int j = 0; j < 4 * mu; ++j) inst.clusters.push_back({static_cast<Vertex>(j)});
  for (int j = 0; j + 1 < mu; ++j) inst.edges.push_back({u(j, 3), u(j + 1, 0), 1});

  // A centre joined to each endpoint by a path of length M; all of it is
  // one cluster. Returns the endpoints.
  auto spider = [&](int legs) {
    std::vector<Vertex> cluster{next};
    const Vertex centre = next++;
    std::vector<Vertex> ends;
    for (int leg = 0; leg < legs; ++leg) {
      Vertex prev = centre;
      for (int step = 0; step < big_m; ++step) {
        inst.edges.push_back({prev, next, 1});
        cluster.push_back(next);
        prev = next++;
      }
      ends.push_back(prev);
    }
    inst.clusters.push_back(std::move(cluster));
    return ends;
  };

  const auto occ = x.occurrences();
  std::vector<std::vector<Vertex>> item_ends;
  for (int i = 0; i < x.num_items(); ++i) item_ends.push_back(spider(occ[static_cast<std::size_t>(i)]));
  std::vector<int> seen(static_cast<std::size_t>(x.num_items()), 0);
  for (int j = 0; j < mu; ++j)
    for (int k = 0; k < 3; ++k) {
      const int item = x.sets[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      const Vertex end = item_ends[static_cast<std::size_t>(item)][static_cast<std::size_t>(seen[static_cast<std::size_t>(item)]++)];
      inst.edges.push_back({u(j, k), end, 1});
      inst.edges.push_back({u(j, k + 1), end, 1});
    }
  for (int z = 0; z < mu - eta; ++z) {
    const auto ends = spider(mu);
    for (int j = 0; j < mu; ++j) {
      inst.edges.push_back({u(j, 0), ends[static_cast<std::size_t>(j)], 1});
      inst.edges.push_back({u(j, 3), ends[static_cast<std::size_t>(j)], 1});
    }
  }
  inst.n = next;
  inst.source = mu > 0 ? u(0, 0) : 0;

  GadgetCertificate cert;
  cert.instance = normalize_instance(std::move(inst));
  cert.kind = GadgetKind::CluspX3c;
  cert.eta = eta;
  cert.mu = mu;
  cert.big_m = big_m;
  cert.sat_threshold = 15 * static_cast<Cost>(mu);
  cert.unsat_threshold = big_m;
  cert.source_problem = x;
  cert.s = mu > 0 ? u(0, 0) : 0;
  cert.t = mu > 0 ? u(mu - 1, 3) : 0;
  cert.note = "s = u_1^0 (first chain vertex), t = u_mu^3";
  return cert;
}

SatResult sat_bruteforce(const CnfFormula& phi) {
  validate_formula(phi);
  if (phi.num_vars > kSatVarLimit)
    throw BudgetExceeded("sat brute force limited to " + std::to_string(kSatVarLimit) + " variables");
  const std::uint64_t total = std::uint64_t{1} << phi.num_vars;
  for (std::uint64_t a = 0; a < total; ++a) {
    const bool all = std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(),
                         [&](const Literal& lit) { return (((a >> lit.var) & 1U) != 0) != lit.negated; });
    });
    if (!all) continue;
    SatResult r{true, {}};
    for (int i = 0; i < phi.num_vars; ++i) r.assignment.push_back(((a >> i) & 1U) != 0);
    return r;
  }
  return {};
}

X3cResult x3c_bruteforce(const X3cInstance& x) {
  validate_x3c(x);
  const int mu = x.num_sets();
  if (mu > kX3cSetLimit)
    throw BudgetExceeded("x3c brute force limited to " + std::to_string(kX3cSetLimit) + " sets");
  if (x.eta > mu) return {};

  std::vector<int> pick;
  std::vector<char> used(static_cast<std::size_t>(x.num_items()), 0);
  // Disjoint η sets over 3η items cover everything.
  auto search = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(pick.size()) == x.eta) return true;
    for (int j = from; j <= mu - (x.eta - static_cast<int>(pick.size())); ++j) {
      const auto& set = x.sets[static_cast<std::size_t>(j)];
      if (std::any_of(set.begin(), set.end(), [&](int i) { return used[static_cast<std::size_t>(i)] != 0; }))
        continue;
      for (int i : set) used[static_cast<std::size_t>(i)] = 1;
      pick.push_back(j);
      if (self(self, j + 1)) return true;
      pick.pop_back();
      for (int i : set) used[static_cast<std::size_t>(i)] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return {};
  return {true, pick};
}

}  // namespace clustree
