#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

/// A clique core together with a private support edge for every core vertex.
///
/// `support[i]` is the support edge of `core[i]`; the support edges form a
/// matching and their far endpoints lie outside the core.
struct SupportedCopy {
  std::vector<VertexId> core;  // sorted
  std::vector<Edge> support;   // aligned with core
  std::size_t pattern_order = 0;

  friend bool operator==(const SupportedCopy&, const SupportedCopy&) = default;
};

enum class SupportSystems {
  kFirstPerCore,  // one copy per clique that admits any support system
  kAll,           // every (core, support system) pair
};

/// Supported r-cliques of g, cores in lexicographic order (r >= 3).
std::vector<SupportedCopy> find_supported_copies(const Graph& g, std::size_t r,
                                                 SupportSystems mode = SupportSystems::kFirstPerCore);

/// Checks the defining conditions of a supported copy against g.
bool is_supported_copy(const Graph& g, const SupportedCopy& c);

/// Cores vertex-disjoint and the union of the supports is a matching.
bool compatible(const SupportedCopy& c1, const SupportedCopy& c2);

/// First compatible pair of supported r-cliques, searching core pairs in
/// lexicographic order and support systems jointly.
std::optional<std::pair<SupportedCopy, SupportedCopy>> find_compatible_pair(const Graph& g,
                                                                            std::size_t r);

/// The promotion move: grow on S1 ∪ S2, put the clique {w} ∪ core(c1) in part A
/// and {w} ∪ core(c2) in part B (leftover edges to A). Throws InvalidInput if
/// the copies are incompatible or not present in the state's graph.
BuilderMove promote(const GameState& s, const SupportedCopy& c1, const SupportedCopy& c2);

}  // namespace dpg
