#include "dpg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "dpg/errors.hpp"

namespace dpg {

Provenance Provenance::created_at(int round) {
  if (round < 1) throw InvalidInput("provenance round must be >= 1");
  Provenance p;
  p.round_ = round;
  return p;
}

Edge Edge::of(VertexId a, VertexId b) {
  if (a == b) throw InvalidInput("self-loop on vertex " + std::to_string(a.value));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::vector<VertexInfo> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const VertexInfo& a, const VertexInfo& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i - 1].id == vertices_[i].id)
      throw InvalidInput("duplicate vertex id " + std::to_string(vertices_[i].id.value));
  }
  for (auto& e : edges_) e = Edge::of(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
    throw InvalidInput("duplicate edge " + std::to_string(it->u.value) + "-" +
                       std::to_string(it->v.value));
  build_index();
}

void Graph::build_index() {
  const std::size_t n = vertices_.size();
  adjacency_.assign(n, {});
  words_ = (n + 63) / 64;
  matrix_.assign(n * words_, 0);
  auto lookup = [&](VertexId v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const VertexInfo& a, VertexId x) { return a.id < x; });
    if (it == vertices_.end() || it->id != v)
      throw InvalidInput("edge endpoint " + std::to_string(v.value) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
  };
  for (const auto& e : edges_) {
    const auto a = lookup(e.u);
    const auto b = lookup(e.v);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    matrix_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    matrix_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<VertexInfo> vs;
  vs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    vs.push_back({VertexId{static_cast<std::uint32_t>(i)}, Provenance::seed(), {}});
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back(Edge::of(a, b));
  return Graph(std::move(vs), std::move(es));
}

Graph Graph::from_edges(std::size_t n,
                        std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  return from_edges(n, std::span<const std::pair<std::uint32_t, std::uint32_t>>(
                           edges.begin(), edges.size()));
}

std::vector<VertexId> Graph::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(
      vertices_.begin(), vertices_.end(), VertexInfo{v, {}, {}},
      [](const VertexInfo& a, const VertexInfo& b) { return a.id < b.id; });
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const VertexInfo& a, VertexId x) { return a.id < x; });
  if (it == vertices_.end() || it->id != v)
    throw InvalidInput("vertex " + std::to_string(v.value) + " is not in the graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::adjacent_indices(std::size_t a, std::size_t b) const {
  return (matrix_[a * words_ + b / 64] >> (b % 64)) & 1U;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return false;
  return adjacent_indices(index_of(a), index_of(b));
}

VertexId Graph::next_vertex_id() const {
  return vertices_.empty() ? VertexId{0} : VertexId{vertices_.back().id.value + 1};
}

std::string Graph::display_name(VertexId v) const {
  const auto& vi = info(v);
  return vi.label.empty() ? std::to_string(v.value) : vi.label;
}

std::optional<VertexId> Graph::find_label(std::string_view label) const {
  for (const auto& v : vertices_)
    if (v.label == label) return v.id;
  return std::nullopt;
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
  return Graph(vertices_, std::move(edges));
}

Graph Graph::with_vertex(VertexInfo vertex, std::span<const VertexId> neighbors) const {
  auto vs = vertices_;
  auto es = edges_;
  for (auto nb : neighbors) es.push_back(Edge::of(vertex.id, nb));
  vs.push_back(std::move(vertex));
  return Graph(std::move(vs), std::move(es));
}

Graph Graph::without_isolated() const {
  std::vector<VertexInfo> vs;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!adjacency_[i].empty()) vs.push_back(vertices_[i]);
  return Graph(std::move(vs), edges_);
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<VertexId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<VertexInfo> vs;
  for (auto id : ids) vs.push_back(info(id));
  std::vector<Edge> es;
  for (const auto& e : edges_)
    if (std::binary_search(ids.begin(), ids.end(), e.u) &&
        std::binary_search(ids.begin(), ids.end(), e.v))
      es.push_back(e);
  return Graph(std::move(vs), std::move(es));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_ != b.edges_) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& x = a.vertices_[i];
    const auto& y = b.vertices_[i];
    if (x.id != y.id || !(x.provenance == y.provenance) || x.label != y.label) return false;
  }
  return true;
}

Graph complete_graph(std::size_t k) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j) es.emplace_back(i, j);
  return Graph::from_edges(k, es);
}

bool is_complete(const Graph& g) {
  const auto n = g.vertex_count();
  return n > 0 && g.edge_count() == n * (n - 1) / 2;
}

bool is_connected(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : g.neighbors_of_index(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

std::vector<Edge> clique_edges(std::span<const VertexId> vertices) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      out.push_back(Edge::of(vertices[i], vertices[j]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dpg
