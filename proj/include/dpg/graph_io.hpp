#pragma once

#include <iosfwd>
#include <string>

#include "dpg/graph.hpp"

namespace dpg {

/// Edge-list text format.
///
///     n m
///     # provenance <vertex> <round>     (optional, per created vertex)
///     # label <vertex> <name>           (optional)
///     u v                               (m lines, 0-based vertex indices)
///
/// Other `#` lines and blank lines are ignored. Indices refer to positions in
/// sorted-id order, so a graph written and read back gets ids 0..n-1.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Graphviz `graph` with vertex labels as node names; created vertices drawn as boxes.
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace dpg
