#include "dpg/matching.hpp"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "dpg/errors.hpp"

namespace dpg {

Matching Matching::of(const Graph& host, std::vector<Edge> edges) {
  for (auto& e : edges) {
    e = Edge::of(e.u, e.v);
    if (!host.has_edge(e))
      throw InvalidInput("matching edge " + host.display_name(e.u) + "-" +
                         host.display_name(e.v) + " is not an edge of the graph");
  }
  std::sort(edges.begin(), edges.end());
  if (!is_matching(edges)) throw InvalidInput("edges do not form a matching");
  return Matching(std::move(edges));
}

bool is_matching(std::span<const Edge> edges) {
  std::set<VertexId> seen;
  for (const auto& e : edges) {
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  }
  return true;
}

std::vector<VertexId> endpoints_of(const Matching& m) {
  std::vector<VertexId> out;
  out.reserve(2 * m.size());
  for (const auto& e : m.edges()) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph cross_graph(const Graph& g, const Matching& m) {
  for (const auto& e : m.edges())
    if (!g.has_edge(e)) throw InvalidInput("matching is not a matching of the graph");
  const auto ends = endpoints_of(m);
  const auto induced = g.induced(ends);
  std::vector<Edge> kept;
  for (const auto& e : induced.edges())
    if (!std::binary_search(m.edges().begin(), m.edges().end(), e)) kept.push_back(e);
  return induced.with_edges(std::move(kept));
}

std::size_t matching_number(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.vertex_count());
  for (const auto& e : g.edges()) boost::add_edge(g.index_of(e.u), g.index_of(e.v), bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.vertex_count());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

namespace {

struct MatchingWalker {
  const Graph& g;
  std::size_t min_size;
  std::size_t max_size;
  const std::function<bool(const Matching&)>& visit;
  std::vector<char> used;
  std::vector<Edge> current;

  bool emit() {
    if (current.size() < min_size) return true;
    return visit(Matching::of(g, current));
  }

  // Edges are tried in sorted order; each recursion level only looks past
  // the previous pick, so every matching appears once.
  bool walk(std::size_t from) {
    if (!emit()) return false;
    if (current.size() == max_size) return true;
    const auto edges = g.edges();
    for (std::size_t i = from; i < edges.size(); ++i) {
      const auto a = g.index_of(edges[i].u);
      const auto b = g.index_of(edges[i].v);
      if (used[a] || used[b]) continue;
      used[a] = used[b] = 1;
      current.push_back(edges[i]);
      const bool go_on = walk(i + 1);
      current.pop_back();
      used[a] = used[b] = 0;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_matching(const Graph& g, std::size_t min_size, std::size_t max_size,
                       const std::function<bool(const Matching&)>& visit) {
  if (min_size > max_size) throw InvalidInput("min_size exceeds max_size");
  MatchingWalker walker{g, min_size, max_size, visit, std::vector<char>(g.vertex_count(), 0), {}};
  return walker.walk(0);
}

std::vector<Matching> enumerate_matchings(const Graph& g, std::size_t min_size,
                                          std::size_t max_size) {
  std::vector<Matching> out;
  for_each_matching(g, min_size, max_size, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace dpg
