#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpg {

/// Stable vertex identity. Vertices are never deleted, so ids are never reused.
struct VertexId {
  std::uint32_t value = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Where a vertex came from: the seed graph, or the growth step of a round.
class Provenance {
 public:
  static Provenance seed() { return Provenance{}; }
  static Provenance created_at(int round);

  bool is_seed() const { return !round_.has_value(); }
  /// Round index (>= 1) of the growth step that created the vertex.
  std::optional<int> round() const { return round_; }

  friend bool operator==(const Provenance&, const Provenance&) = default;

 private:
  std::optional<int> round_;
};

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  /// Normalizes endpoint order; throws InvalidInput on a self-loop.
  static Edge of(VertexId a, VertexId b);
  static Edge of(std::uint32_t a, std::uint32_t b) { return of(VertexId{a}, VertexId{b}); }

  bool touches(VertexId x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct VertexInfo {
  VertexId id;
  Provenance provenance;
  std::string label;  // may be empty
};

/// Finite simple undirected graph with stable vertex identities.
///
/// A Graph is an immutable value: every transformation returns a new graph.
/// Vertices are kept sorted by id and edges sorted lexicographically, which
/// fixes the iteration order used by every enumeration in the library.
/// Vertex *indices* (0..n-1, position in the sorted vertex list) are used by
/// the dense accessors.
class Graph {
 public:
  Graph() = default;
  /// Validates: distinct ids, no self-loops, no duplicate edges, endpoints present.
  Graph(std::vector<VertexInfo> vertices, std::vector<Edge> edges);

  /// Seed graph on ids 0..n-1.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
  static Graph from_edges(std::size_t n,
                          std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  std::span<const VertexInfo> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::vector<VertexId> vertex_ids() const;

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Position of v in the sorted vertex list; throws InvalidInput if absent.
  std::size_t index_of(VertexId v) const;
  VertexId id_at(std::size_t index) const { return vertices_[index].id; }
  const VertexInfo& info(VertexId v) const { return vertices_[index_of(v)]; }

  /// Neighbor indices of the vertex at `index`, ascending.
  std::span<const std::size_t> neighbors_of_index(std::size_t index) const {
    return adjacency_[index];
  }
  bool adjacent_indices(std::size_t a, std::size_t b) const;
  std::size_t degree(VertexId v) const { return adjacency_[index_of(v)].size(); }

  /// First id strictly greater than every id in the graph.
  VertexId next_vertex_id() const;

  /// Label of v, or its numeric id when unlabeled.
  std::string display_name(VertexId v) const;
  std::optional<VertexId> find_label(std::string_view label) const;

  /// Same vertex set, replaced edge set (validated).
  Graph with_edges(std::vector<Edge> edges) const;
  /// Adds a vertex and edges incident to it.
  Graph with_vertex(VertexInfo vertex, std::span<const VertexId> neighbors) const;
  /// Drops vertices of degree 0.
  Graph without_isolated() const;
  /// Induced subgraph on the given vertices (all must be present).
  Graph induced(std::span<const VertexId> keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void build_index();

  std::vector<VertexInfo> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> matrix_;  // row-major bit matrix, words_ per row
};

/// Complete graph K_k on ids 0..k-1.
Graph complete_graph(std::size_t k);
/// True iff every pair of vertices is adjacent (and the graph is nonempty).
bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
/// Edges of the complete graph on the given vertices, sorted.
std::vector<Edge> clique_edges(std::span<const VertexId> vertices);

}  // namespace dpg
