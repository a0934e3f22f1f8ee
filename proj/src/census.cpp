#include "dpg/census.hpp"

#include <bit>
#include <set>

#include "dpg/canonical.hpp"
#include "dpg/errors.hpp"

namespace dpg {

namespace {

using EdgePairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

EdgePairs pairs_of(const Graph& g) {
  EdgePairs out;
  for (const auto& e : g.edges()) out.emplace_back(e.u.value, e.v.value);
  return out;
}

}  // namespace

// Every filtered class on n vertices arises from one on n-1 vertices by adding
// a vertex: all three filters are hereditary (connected graphs keep a
// non-cut vertex to delete).
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n, const CensusFilter& filter) {
  if (n == 0) return {};
  if (n > 12) throw InvalidInput("census is limited to 12 vertices");
  std::vector<Graph> level{Graph::from_edges(1, EdgePairs{})};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::set<CanonicalKey> seen;
    const auto old = static_cast<std::uint32_t>(k - 1);
    for (const auto& g : level) {
      const auto base = pairs_of(g);
      for (std::uint32_t subset = 0; subset < (1U << old); ++subset) {
        if (filter.connected && subset == 0) continue;
        if (base.size() + static_cast<std::size_t>(std::popcount(subset)) > filter.max_edges) continue;
        if (filter.triangle_free) {
          bool independent = true;
          for (const auto& [a, b] : base)
            if ((subset >> a & 1U) && (subset >> b & 1U)) independent = false;
          if (!independent) continue;
        }
        auto edges = base;
        for (std::uint32_t u = 0; u < old; ++u)
          if (subset >> u & 1U) edges.emplace_back(u, old);
        auto h = Graph::from_edges(k, edges);
        if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> graphs_up_to_isomorphism_through(std::size_t max_n, const CensusFilter& filter) {
  std::vector<Graph> all;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = graphs_up_to_isomorphism(n, filter);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace dpg
