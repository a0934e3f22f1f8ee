#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

/// Image of each pattern vertex, indexed by the pattern's vertex order.
using Embedding = std::vector<VertexId>;

/// A pattern copy: one embedding plus the (sorted) host edges it occupies.
struct Copy {
  Embedding embedding;
  std::vector<Edge> edges;
};

/// Up to `cap` copies of `pattern` in `g`, each distinct subgraph reported
/// once (embeddings differing by a pattern automorphism are merged).
/// Order is deterministic: search follows sorted vertex order.
std::vector<Copy> find_copies(const Graph& g, const Graph& pattern,
                              std::size_t cap = std::numeric_limits<std::size_t>::max());

bool contains_copy(const Graph& g, const Graph& pattern);

/// First pair (in find_copies order) of copies with disjoint edge images.
std::optional<std::pair<Copy, Copy>> two_edge_disjoint_copies(const Graph& g,
                                                              const Graph& pattern);

/// Isomorphism from `a` onto `b` (image of each vertex of `a`, in a's vertex
/// order), or nullopt. Both graphs are taken as-is, isolated vertices included.
std::optional<Embedding> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace dpg
