#pragma once

#include <string>

#include <json.hpp>

#include "flowpoly/digraph.hpp"
#include "flowpoly/dkk.hpp"
#include "flowpoly/flows.hpp"

namespace flowpoly {

// {"n": n, "edges": [[tail, head], ...]} with edges in EdgeId order.
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

// {"vertices": [{"vertex": v, "in": [...], "out": [...]}, ...]} over the
// internal vertices.
nlohmann::json framing_to_json(const Framing& fr);
Framing framing_from_json(const Multigraph& g, const nlohmann::json& j);

// List of routes, each a list of EdgeIds.
nlohmann::json clique_to_json(const Clique& c);

/// Graph from a builder spec: kabc:n,a,b,c | kabcS:n,a,b,c,S=1|3 |
/// gpq:p,q | complete:n | @path to a graph JSON file.
///
/// Malformed specs throw UsageError.
Multigraph parse_graph_spec(const std::string& spec);

// Comma-separated integers.
std::vector<std::int64_t> parse_int_list(const std::string& csv);

nlohmann::json read_json_file(const std::string& path);

}  // namespace flowpoly
