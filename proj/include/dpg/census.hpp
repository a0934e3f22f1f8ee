#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

struct CensusFilter {
  bool triangle_free = false;
  bool connected = false;
  std::size_t max_edges = std::numeric_limits<std::size_t>::max();
};

/// One representative per isomorphism class of graphs on exactly n vertices
/// (ids 0..n-1) passing the filter, in a deterministic order.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n, const CensusFilter& filter = {});

/// Union over 1..max_n.
std::vector<Graph> graphs_up_to_isomorphism_through(std::size_t max_n,
                                                    const CensusFilter& filter = {});

}  // namespace dpg
