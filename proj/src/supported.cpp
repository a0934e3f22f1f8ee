#include "dpg/supported.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dpg/cliques.hpp"
#include "dpg/errors.hpp"

namespace dpg {

namespace {

bool in_sorted(const std::vector<VertexId>& xs, VertexId v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

// Assigns every core vertex a distinct neighbor outside the core.
struct SupportSearch {
  const Graph& g;
  const std::vector<VertexId>& core;
  bool all;
  std::vector<SupportedCopy>& out;
  std::vector<Edge> chosen;
  std::set<VertexId> taken;

  bool walk(std::size_t i) {
    if (i == core.size()) {
      out.push_back({core, chosen, core.size()});
      return all;
    }
    const auto ci = g.index_of(core[i]);
    for (auto xi : g.neighbors_of_index(ci)) {
      const auto x = g.id_at(xi);
      if (in_sorted(core, x) || taken.count(x)) continue;
      taken.insert(x);
      chosen.push_back(Edge::of(core[i], x));
      const bool go_on = walk(i + 1);
      chosen.pop_back();
      taken.erase(x);
      if (!go_on) return false;
    }
    return true;
  }
};

std::vector<Edge> support_union(const SupportedCopy& a, const SupportedCopy& b) {
  std::vector<Edge> u(a.support);
  u.insert(u.end(), b.support.begin(), b.support.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

// Joint support search for two disjoint cores under the compatibility rule:
// every core vertex gets one support edge leaving its own core, and the set
// of all chosen edges is a matching (an edge may serve both cores).
struct PairSearch {
  const Graph& g;
  const std::vector<VertexId>& core1;
  const std::vector<VertexId>& core2;
  std::vector<Edge> support1, support2;
  std::map<VertexId, Edge> cover;

  const std::vector<VertexId>& own(std::size_t i) const {
    return i < core1.size() ? core1 : core2;
  }
  VertexId vertex(std::size_t i) const {
    return i < core1.size() ? core1[i] : core2[i - core1.size()];
  }
  void assign(std::size_t i, const Edge& e) {
    (i < core1.size() ? support1 : support2).push_back(e);
  }
  void unassign(std::size_t i) { (i < core1.size() ? support1 : support2).pop_back(); }

  bool walk(std::size_t i) {
    if (i == core1.size() + core2.size()) return true;
    const auto v = vertex(i);
    if (auto it = cover.find(v); it != cover.end()) {
      const auto e = it->second;
      const auto other = e.u == v ? e.v : e.u;
      if (in_sorted(own(i), other)) return false;
      assign(i, e);
      if (walk(i + 1)) return true;
      unassign(i);
      return false;
    }
    for (auto xi : g.neighbors_of_index(g.index_of(v))) {
      const auto x = g.id_at(xi);
      if (in_sorted(own(i), x) || cover.count(x)) continue;
      const auto e = Edge::of(v, x);
      cover[v] = e;
      cover[x] = e;
      assign(i, e);
      if (walk(i + 1)) return true;
      unassign(i);
      cover.erase(v);
      cover.erase(x);
    }
    return false;
  }
};

}  // namespace

std::vector<SupportedCopy> find_supported_copies(const Graph& g, std::size_t r,
                                                 SupportSystems mode) {
  if (r < 3) throw InvalidInput("supported copies require r >= 3");
  std::vector<SupportedCopy> out;
  for (const auto& core : cliques_of_size(g, r)) {
    SupportSearch s{g, core, mode == SupportSystems::kAll, out, {}, {}};
    s.walk(0);
  }
  return out;
}

bool is_supported_copy(const Graph& g, const SupportedCopy& c) {
  if (c.core.size() != c.pattern_order || c.support.size() != c.core.size()) return false;
  if (!std::is_sorted(c.core.begin(), c.core.end())) return false;
  for (std::size_t i = 0; i < c.core.size(); ++i)
    for (std::size_t j = i + 1; j < c.core.size(); ++j)
      if (!g.has_edge(c.core[i], c.core[j])) return false;
  for (std::size_t i = 0; i < c.core.size(); ++i) {
    const auto& e = c.support[i];
    if (!g.has_edge(e) || !e.touches(c.core[i])) return false;
    const auto far = e.u == c.core[i] ? e.v : e.u;
    if (in_sorted(c.core, far)) return false;
  }
  return is_matching(c.support);
}

bool compatible(const SupportedCopy& c1, const SupportedCopy& c2) {
  std::vector<VertexId> shared;
  std::set_intersection(c1.core.begin(), c1.core.end(), c2.core.begin(), c2.core.end(),
                        std::back_inserter(shared));
  if (!shared.empty()) return false;
  return is_matching(support_union(c1, c2));
}

std::optional<std::pair<SupportedCopy, SupportedCopy>> find_compatible_pair(const Graph& g,
                                                                            std::size_t r) {
  if (r < 3) throw InvalidInput("supported copies require r >= 3");
  const auto cores = cliques_of_size(g, r);
  for (std::size_t i = 0; i < cores.size(); ++i) {
    for (std::size_t j = i + 1; j < cores.size(); ++j) {
      std::vector<VertexId> shared;
      std::set_intersection(cores[i].begin(), cores[i].end(), cores[j].begin(), cores[j].end(),
                            std::back_inserter(shared));
      if (!shared.empty()) continue;
      PairSearch s{g, cores[i], cores[j], {}, {}, {}};
      if (s.walk(0))
        return std::make_pair(SupportedCopy{cores[i], s.support1, r},
                              SupportedCopy{cores[j], s.support2, r});
    }
  }
  return std::nullopt;
}

BuilderMove promote(const GameState& s, const SupportedCopy& c1, const SupportedCopy& c2) {
  const auto& g = s.graph();
  if (!is_supported_copy(g, c1) || !is_supported_copy(g, c2))
    throw InvalidInput("promote: argument is not a supported copy of the current graph");
  if (!compatible(c1, c2)) throw InvalidInput("promote: supported copies are not compatible");
  auto m = Matching::of(g, support_union(c1, c2));
  const auto inter = s.grow(m);
  auto side = [&](const SupportedCopy& c) {
    auto vs = c.core;
    vs.push_back(inter.new_vertex);
    std::sort(vs.begin(), vs.end());
    return clique_edges(vs);
  };
  return assemble_move(inter.graph, std::move(m), side(c1), side(c2));
}

}  // namespace dpg
