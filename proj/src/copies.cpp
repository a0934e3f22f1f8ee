#include "dpg/copies.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dpg {

namespace {

using Index = std::size_t;

// Pattern vertices in BFS order, component by component, plus for each
// position the earlier position of one neighbor (anchor), if any.
struct SearchOrder {
  std::vector<Index> order;
  std::vector<std::optional<Index>> anchor;
};

SearchOrder bfs_order(const Graph& p) {
  const auto n = p.vertex_count();
  SearchOrder so;
  std::vector<std::optional<Index>> pos(n);
  for (Index start = 0; start < n; ++start) {
    if (pos[start]) continue;
    pos[start] = so.order.size();
    so.order.push_back(start);
    so.anchor.push_back(std::nullopt);
    for (std::size_t head = so.order.size() - 1; head < so.order.size(); ++head) {
      const auto v = so.order[head];
      for (auto w : p.neighbors_of_index(v)) {
        if (pos[w]) continue;
        pos[w] = so.order.size();
        so.order.push_back(w);
        so.anchor.push_back(v);
      }
    }
  }
  return so;
}

struct Matcher {
  const Graph& host;
  const Graph& pattern;
  bool exact;  // isomorphism mode: equal degrees and induced adjacency
  SearchOrder so;
  std::vector<std::optional<Index>> image;  // pattern index -> host index
  std::vector<char> used;
  std::function<bool()> on_complete;  // returns false to stop

  bool consistent(Index pv, Index hv) const {
    if (used[hv]) return false;
    const auto pd = pattern.neighbors_of_index(pv).size();
    const auto hd = host.neighbors_of_index(hv).size();
    if (exact ? pd != hd : pd > hd) return false;
    for (Index q = 0; q < pattern.vertex_count(); ++q) {
      if (!image[q]) continue;
      const bool pe = pattern.adjacent_indices(pv, q);
      const bool he = host.adjacent_indices(hv, *image[q]);
      if (pe && !he) return false;
      if (exact && he && !pe) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == so.order.size()) return on_complete();
    const auto pv = so.order[depth];
    auto try_candidate = [&](Index hv) {
      if (!consistent(pv, hv)) return true;
      image[pv] = hv;
      used[hv] = 1;
      const bool go_on = extend(depth + 1);
      used[hv] = 0;
      image[pv].reset();
      return go_on;
    };
    if (so.anchor[depth]) {
      for (auto hv : host.neighbors_of_index(*image[*so.anchor[depth]]))
        if (!try_candidate(hv)) return false;
    } else {
      for (Index hv = 0; hv < host.vertex_count(); ++hv)
        if (!try_candidate(hv)) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Copy> find_copies(const Graph& g, const Graph& pattern, std::size_t cap) {
  std::vector<Copy> out;
  if (cap == 0 || pattern.vertex_count() > g.vertex_count() ||
      pattern.edge_count() > g.edge_count())
    return out;
  std::set<std::pair<std::vector<Edge>, std::vector<VertexId>>> seen;
  Matcher m{g, pattern, false, bfs_order(pattern),
            std::vector<std::optional<Index>>(pattern.vertex_count()),
            std::vector<char>(g.vertex_count(), 0), {}};
  m.on_complete = [&] {
    Copy c;
    for (const auto& im : m.image) c.embedding.push_back(g.id_at(*im));
    for (const auto& e : pattern.edges())
      c.edges.push_back(Edge::of(c.embedding[pattern.index_of(e.u)],
                                 c.embedding[pattern.index_of(e.v)]));
    std::sort(c.edges.begin(), c.edges.end());
    auto verts = c.embedding;
    std::sort(verts.begin(), verts.end());
    if (seen.emplace(c.edges, std::move(verts)).second) out.push_back(std::move(c));
    return out.size() < cap;
  };
  m.extend(0);
  return out;
}

bool contains_copy(const Graph& g, const Graph& pattern) {
  return !find_copies(g, pattern, 1).empty();
}

std::optional<std::pair<Copy, Copy>> two_edge_disjoint_copies(const Graph& g,
                                                              const Graph& pattern) {
  const auto copies = find_copies(g, pattern);
  auto disjoint = [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return true;
  };
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (std::size_t j = i + 1; j < copies.size(); ++j)
      if (disjoint(copies[i].edges, copies[j].edges)) return std::make_pair(copies[i], copies[j]);
  return std::nullopt;
}

std::optional<Embedding> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  std::optional<Embedding> found;
  Matcher m{b, a, true, bfs_order(a), std::vector<std::optional<Index>>(a.vertex_count()),
            std::vector<char>(b.vertex_count(), 0), {}};
  m.on_complete = [&] {
    Embedding e;
    for (const auto& im : m.image) e.push_back(b.id_at(*im));
    found = std::move(e);
    return false;
  };
  m.extend(0);
  return found;
}

}  // namespace dpg
