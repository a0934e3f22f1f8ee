#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dpg/graph.hpp"

namespace testing_helpers {

inline dpg::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (edge(rng)) es.emplace_back(u, v);
  return dpg::Graph::from_edges(n, es);
}

/// Same graph with vertex i renamed perm[i] (perm is a permutation of 0..n-1).
inline dpg::Graph relabel(const dpg::Graph& g, const std::vector<std::uint32_t>& perm) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (const auto& e : g.edges())
    es.emplace_back(perm[g.index_of(e.u)], perm[g.index_of(e.v)]);
  return dpg::Graph::from_edges(g.vertex_count(), es);
}

inline std::vector<std::uint32_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Every labeled graph on n vertices (n <= 6), edge mask order.
inline std::vector<dpg::Graph> all_labeled(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<dpg::Graph> out;
  for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1ULL) es.push_back(pairs[i]);
    out.push_back(dpg::Graph::from_edges(n, es));
  }
  return out;
}

}  // namespace testing_helpers
