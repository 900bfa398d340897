#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "clustree/approx.hpp"
#include "clustree/exact.hpp"
#include "clustree/instance.hpp"
#include "clustree/reductions.hpp"

namespace clustree {

using Json = nlohmann::ordered_json;

/// Parses the instance format and returns the canonical form. Errors are
/// InvalidInput with the offending field in the message, e.g.
/// "edges[2][2]: negative weight".
ClusteredInstance parse_instance(std::string_view text);
/// Canonical bytes: serialize(parse(x)) == x for canonical x.
std::string serialize_instance(const ClusteredInstance& inst);

Json solution_json(const SpanningTreeSolution& tree);
Json certificate_json(const RatioCertificate& cert);
Json path_json(const ClusteredPath& path);
Json gadget_json(const GadgetCertificate& cert);

/// DIMACS CNF; every clause must have exactly three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& phi);

/// {"items": 3η, "sets": [[i, j, k], ...]} with 0-based items.
X3cInstance parse_x3c(std::string_view text);
std::string write_x3c(const X3cInstance& x);

/// Undirected DOT graph, one `subgraph cluster_i` per cluster; tree edges
/// drawn bold when a solution is given.
std::string export_dot(const ClusteredInstance& inst, const SpanningTreeSolution* tree = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace clustree
