#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bdom/graph.hpp"

namespace bdom {

// Edge-list text format:
//
//   # comment
//   5          <- vertex count
//   0 1        <- one undirected edge per line, 0-based
//   1 2
//
// Blank lines are skipped and '#' starts a comment anywhere on a line.

/// Throws InputError naming the offending 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Writes the vertex count and the sorted edge list; parse_edge_list inverts it.
std::string serialize(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

/// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace bdom
