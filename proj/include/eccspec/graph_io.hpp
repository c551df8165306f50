#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "eccspec/graph.hpp"

namespace eccspec {

// graph6 with the single-byte size header (n <= 62).
std::string graph6_encode(const Graph& g);
// Throws std::invalid_argument on a malformed length or a byte outside 63..126.
Graph graph6_decode(std::string_view text);

// Edge-list text: a header "n=K" followed by one "u v" pair per line
// (0-indexed). ';' also separates entries, '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Resolves a command-line graph argument: a family id (contains ':'),
// a path to an edge-list or graph6 file, or a literal graph6 string.
Graph load_graph_argument(const std::string& arg);

}  // namespace eccspec
