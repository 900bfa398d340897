#include "clustree/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace clustree {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidInput(field.empty() ? what : field + ": " + what);
}

std::int64_t integer(const Json& node, const std::string& field) {
  if (!node.is_number_integer()) fail(field, "expected integer");
  return node.get<std::int64_t>();
}

Vertex vertex(const Json& node, const std::string& field, int n) {
  const std::int64_t v = integer(node, field);
  if (v < 0 || v >= n) fail(field, "vertex out of range");
  return static_cast<Vertex>(v);
}

const Json& member(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing field");
  return *it;
}

Json cost_json(Cost c) { return c >= kInfinity ? Json("INFINITY") : Json(c); }

}  // namespace

ClusteredInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object");

  ClusteredInstance inst;
  const std::int64_t n = integer(member(doc, "n"), "n");
  if (n < 1 || n > std::numeric_limits<Vertex>::max()) fail("n", "vertex count out of range");
  inst.n = static_cast<int>(n);
  const Json& weighted = member(doc, "weighted");
  if (!weighted.is_boolean()) fail("weighted", "expected boolean");
  inst.weighted = weighted.get<bool>();

  const Json& edges = member(doc, "edges");
  if (!edges.is_array()) fail("edges", "expected array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) fail(field, "expected [u, v, w]");
    Edge edge{vertex(e[0], field + "[0]", inst.n), vertex(e[1], field + "[1]", inst.n), 1};
    if (e.size() == 3) {
      edge.w = integer(e[2], field + "[2]");
      if (edge.w < 0) fail(field + "[2]", "negative weight");
      if (!inst.weighted && edge.w != 1) fail(field + "[2]", "unweighted instance needs weight 1");
    }
    inst.edges.push_back(edge);
  }

  const Json& clusters = member(doc, "clusters");
  if (!clusters.is_array()) fail("clusters", "expected array");
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const std::string field = "clusters[" + std::to_string(i) + "]";
    if (!clusters[i].is_array()) fail(field, "expected array");
    std::vector<Vertex> members;
    for (std::size_t j = 0; j < clusters[i].size(); ++j)
      members.push_back(vertex(clusters[i][j], field + "[" + std::to_string(j) + "]", inst.n));
    inst.clusters.push_back(std::move(members));
  }
  inst.source = vertex(member(doc, "source"), "source", inst.n);

  require_structurally_valid(inst);
  return normalize_instance(std::move(inst));
}

std::string serialize_instance(const ClusteredInstance& inst) {
  Json doc;
  doc["n"] = inst.n;
  doc["weighted"] = inst.weighted;
  Json edges = Json::array();
  for (const Edge& e : inst.edges) edges.push_back({e.u, e.v, e.w});
  doc["edges"] = std::move(edges);
  doc["clusters"] = inst.clusters;
  doc["source"] = inst.source;
  return doc.dump() + "\n";
}

Json solution_json(const SpanningTreeSolution& tree) {
  Json doc;
  doc["parent"] = tree.parent;
  doc["dist"] = tree.dist;
  doc["cost"] = tree.cost;
  doc["feasible"] = tree.feasible;
  return doc;
}

Json certificate_json(const RatioCertificate& cert) {
  Json doc;
  doc["gamma"] = cert.gamma;
  doc["n"] = cert.n;
  doc["k"] = cert.k;
  doc["applicable"] = cert.applicable;
  if (cert.applicable) {
    doc["terms"] = {{"4nk/gamma", cert.terms[0].str()},
                    {"4n^2/gamma^2", cert.terms[1].str()},
                    {"2gamma", cert.terms[2].str()}};
    doc["rho"] = cert.rho.str();
  } else {
    doc["rho"] = "not applicable";
  }
  doc["lower_bound"] = cert.lower_bound;
  if (!cert.note.empty()) doc["note"] = cert.note;
  return doc;
}

Json path_json(const ClusteredPath& path) {
  Json doc;
  doc["length"] = cost_json(path.length);
  doc["path"] = path.vertices;
  doc["reachable"] = path.reachable();
  return doc;
}

Json gadget_json(const GadgetCertificate& cert) {
  Json doc;
  doc["kind"] = to_string(cert.kind);
  doc["eta"] = cert.eta;
  doc["mu"] = cert.mu;
  if (cert.big_m > 0) doc["M"] = cert.big_m;
  doc["satThreshold"] = cert.sat_threshold;
  doc["unsatThreshold"] = cert.unsat_threshold;
  doc["s"] = cert.s;
  if (cert.t >= 0) doc["t"] = cert.t;
  if (const auto* phi = std::get_if<CnfFormula>(&cert.source_problem)) {
    doc["sourceProblem"] = write_dimacs(*phi);
  } else {
    doc["sourceProblem"] = Json::parse(write_x3c(std::get<X3cInstance>(cert.source_problem)));
  }
  if (!cert.note.empty()) doc["note"] = cert.note;
  return doc;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula phi;
  bool header = false;
  std::int64_t declared = 0;
  std::vector<int> pending;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (header || !(tokens >> fmt >> phi.num_vars >> declared) || fmt != "cnf" || phi.num_vars < 0 || declared < 0)
        fail(where, "bad problem line");
      header = true;
      continue;
    }
    if (!header) fail(where, "clause before problem line");
    tokens.clear();
    tokens.str(line);
    long long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) fail(where, "clause must have exactly 3 literals");
        Clause c;
        for (int k = 0; k < 3; ++k) {
          const int x = pending[static_cast<std::size_t>(k)];
          c[static_cast<std::size_t>(k)] = Literal{(x < 0 ? -x : x) - 1, x < 0};
        }
        phi.clauses.push_back(c);
        pending.clear();
        continue;
      }
      if (lit > phi.num_vars || -lit > phi.num_vars) fail(where, "variable out of range");
      pending.push_back(static_cast<int>(lit));
    }
    if (!tokens.eof()) fail(where, "expected integer literal");
  }
  if (!header) fail("", "missing problem line");
  if (!pending.empty()) fail("", "unterminated clause");
  if (static_cast<std::int64_t>(phi.clauses.size()) != declared)
    fail("", "header declares " + std::to_string(declared) + " clauses, found " + std::to_string(phi.clauses.size()));
  return phi;
}

std::string write_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const Clause& c : phi.clauses) {
    for (const Literal& lit : c) out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

X3cInstance parse_x3c(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object");
  X3cInstance x;
  const std::int64_t items = integer(member(doc, "items"), "items");
  if (items < 0 || items % 3 != 0 || items > 3 * 1'000'000) fail("items", "item count must be a multiple of 3");
  x.eta = static_cast<int>(items / 3);
  const Json& sets = member(doc, "sets");
  if (!sets.is_array()) fail("sets", "expected array");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const std::string field = "sets[" + std::to_string(j) + "]";
    if (!sets[j].is_array() || sets[j].size() != 3) fail(field, "expected three items");
    std::array<int, 3> set{};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::int64_t item = integer(sets[j][k], field + "[" + std::to_string(k) + "]");
      if (item < 0 || item >= items) fail(field, "item out of range");
      set[k] = static_cast<int>(item);
    }
    x.sets.push_back(set);
  }
  validate_x3c(x);
  return x;
}

std::string write_x3c(const X3cInstance& x) {
  Json doc;
  doc["items"] = x.num_items();
  doc["sets"] = x.sets;
  return doc.dump() + "\n";
}

std::string export_dot(const ClusteredInstance& inst, const SpanningTreeSolution* tree) {
  std::set<std::pair<Vertex, Vertex>> bold;
  if (tree)
    for (Vertex v = 0; v < static_cast<Vertex>(tree->parent.size()); ++v) {
      const Vertex p = tree->parent[static_cast<std::size_t>(v)];
      if (p >= 0 && p != v) bold.emplace(std::min(p, v), std::max(p, v));
    }
  std::ostringstream out;
  out << "graph clustree {\n";
  for (std::size_t i = 0; i < inst.clusters.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n    label=\"V" << i << "\";\n";
    for (Vertex v : inst.clusters[i]) {
      out << "    " << v;
      if (v == inst.source) out << " [shape=doublecircle]";
      out << ";\n";
    }
    out << "  }\n";
  }
  for (const Edge& e : inst.edges) {
    out << "  " << e.u << " -- " << e.v;
    std::vector<std::string> attrs;
    if (inst.weighted) attrs.push_back("label=\"" + std::to_string(e.w) + "\"");
    if (bold.contains({std::min(e.u, e.v), std::max(e.u, e.v)})) attrs.emplace_back("style=bold");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << ']';
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
  if (!out) throw InvalidInput("write failed: " + path);
}

}  // namespace clustree
