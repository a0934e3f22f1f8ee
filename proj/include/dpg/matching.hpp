#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

/// A set of pairwise vertex-disjoint edges of a particular host graph.
///
/// Construction through `Matching::of` validates against the host; the
/// edges are kept sorted.
class Matching {
 public:
  Matching() = default;

  /// Throws InvalidInput if an edge is missing from `host` or two edges share an endpoint.
  static Matching of(const Graph& host, std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {}
  std::vector<Edge> edges_;
};

/// True iff `edges` are pairwise vertex-disjoint (ignores host membership).
bool is_matching(std::span<const Edge> edges);

/// V(M): all endpoints of the matching, sorted. Size is exactly 2|M|.
std::vector<VertexId> endpoints_of(const Matching& m);

/// G[V(M)] - M: induced subgraph on the matched endpoints with M removed.
/// Throws InvalidInput if m is not a matching of g.
Graph cross_graph(const Graph& g, const Matching& m);

/// Maximum matching size. Exact.
std::size_t matching_number(const Graph& g);

/// Visits every matching of g with min_size <= |M| <= max_size exactly once,
/// in lexicographic order of sorted edge sequences (the empty matching first
/// when in range). The visitor returns false to stop early. Returns false
/// iff the visit was stopped.
bool for_each_matching(const Graph& g, std::size_t min_size, std::size_t max_size,
                       const std::function<bool(const Matching&)>& visit);

/// Materialized form of for_each_matching.
std::vector<Matching> enumerate_matchings(const Graph& g, std::size_t min_size,
                                          std::size_t max_size);

}  // namespace dpg
