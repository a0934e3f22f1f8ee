#include "dpg/cliques.hpp"

#include <algorithm>

#include "dpg/errors.hpp"

namespace dpg {

namespace {

using Index = std::size_t;
using IndexSet = std::vector<Index>;  // always sorted

IndexSet intersect_neighbors(const Graph& g, const IndexSet& set, Index v) {
  IndexSet out;
  const auto nb = g.neighbors_of_index(v);
  std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

// Tomita-style pivot: the pivot maximizes |P ∩ N(u)| over u in P ∪ X.
void bron_kerbosch(const Graph& g, IndexSet& r, IndexSet p, IndexSet x,
                   const std::function<void(const IndexSet&)>& visit) {
  if (p.empty()) {
    if (x.empty()) visit(r);
    return;
  }
  Index pivot = p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (auto u : *set) {
      const auto c = intersect_neighbors(g, p, u).size();
      if (c > best || (c == best && u < pivot)) {
        best = c;
        pivot = u;
      }
    }
  IndexSet candidates;
  const auto pn = g.neighbors_of_index(pivot);
  std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));
  for (auto v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect_neighbors(g, p, v), intersect_neighbors(g, x, v), visit);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

void extend_cliques(const Graph& g, std::size_t k, IndexSet& current, const IndexSet& candidates,
                    std::vector<IndexSet>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) < k) return;
    const auto v = candidates[i];
    IndexSet next;
    const auto nb = g.neighbors_of_index(v);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          candidates.end(), nb.begin(), nb.end(), std::back_inserter(next));
    current.push_back(v);
    extend_cliques(g, k, current, next, out);
    current.pop_back();
  }
}

std::vector<IndexSet> clique_indices(const Graph& g, std::size_t k) {
  std::vector<IndexSet> out;
  if (k == 0) return {IndexSet{}};
  IndexSet all(g.vertex_count());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  IndexSet current;
  extend_cliques(g, k, current, all, out);
  return out;
}

struct Packer {
  std::size_t r;
  std::vector<IndexSet> cliques;
  std::vector<std::vector<std::size_t>> by_first_vertex;  // cliques keyed by their min vertex
  std::vector<char> used;
  std::size_t best = 0;

  bool free_clique(const IndexSet& c) const {
    return std::none_of(c.begin(), c.end(), [&](Index v) { return used[v]; });
  }

  void search(Index from, std::size_t count) {
    best = std::max(best, count);
    std::size_t free_vertices = 0;
    for (Index v = from; v < used.size(); ++v) free_vertices += used[v] ? 0 : 1;
    if (count + free_vertices / r <= best) return;
    for (Index v = from; v < used.size(); ++v) {
      if (used[v]) continue;
      // Either some clique whose smallest vertex is v is taken, or v is skipped.
      for (auto ci : by_first_vertex[v]) {
        const auto& c = cliques[ci];
        if (!free_clique(c)) continue;
        for (auto u : c) used[u] = 1;
        search(v + 1, count + 1);
        for (auto u : c) used[u] = 0;
      }
      used[v] = 1;
      search(v + 1, count);
      used[v] = 0;
      return;
    }
  }
};

}  // namespace

void for_each_maximal_clique(const Graph& g,
                             const std::function<void(std::span<const VertexId>)>& visit) {
  if (g.vertex_count() == 0) return;
  IndexSet p(g.vertex_count());
  for (Index i = 0; i < p.size(); ++i) p[i] = i;
  IndexSet r;
  bron_kerbosch(g, r, std::move(p), {}, [&](const IndexSet& clique) {
    std::vector<VertexId> ids;
    for (auto i : clique) ids.push_back(g.id_at(i));
    std::sort(ids.begin(), ids.end());
    visit(ids);
  });
}

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  for_each_maximal_clique(g, [&](std::span<const VertexId> c) { best = std::max(best, c.size()); });
  return best;
}

std::vector<std::vector<VertexId>> cliques_of_size(const Graph& g, std::size_t k) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& c : clique_indices(g, k)) {
    std::vector<VertexId> ids;
    for (auto i : c) ids.push_back(g.id_at(i));
    out.push_back(std::move(ids));
  }
  return out;
}

bool contains_clique(const Graph& g, std::size_t k) {
  if (k <= 1) return g.vertex_count() >= k;
  return clique_number(g) >= k;
}

std::size_t clique_packing_number(const Graph& g, std::size_t r) {
  if (r < 2) throw InvalidInput("clique_packing_number requires r >= 2");
  Packer packer{r, clique_indices(g, r), {}, std::vector<char>(g.vertex_count(), 0), 0};
  packer.by_first_vertex.assign(g.vertex_count(), {});
  for (std::size_t i = 0; i < packer.cliques.size(); ++i)
    packer.by_first_vertex[packer.cliques[i].front()].push_back(i);
  packer.search(0, 0);
  return packer.best;
}

}  // namespace dpg
