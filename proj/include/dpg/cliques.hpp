#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

/// Visits every maximal clique (pivoting Bron-Kerbosch). Vertex lists are sorted.
void for_each_maximal_clique(const Graph& g,
                             const std::function<void(std::span<const VertexId>)>& visit);

/// omega(g); 0 for the empty graph.
std::size_t clique_number(const Graph& g);

/// All k-cliques as sorted vertex lists, in lexicographic order.
std::vector<std::vector<VertexId>> cliques_of_size(const Graph& g, std::size_t k);

/// True iff g contains K_k.
bool contains_clique(const Graph& g, std::size_t k);

/// Maximum number of pairwise vertex-disjoint r-cliques (nu_{K_r}). Exact backtracking.
std::size_t clique_packing_number(const Graph& g, std::size_t r);

}  // namespace dpg
