#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace oracle {

bool Small::adj(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

Small make(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return {n, std::move(edges)};
}

Small from(const dpg::Graph& g) {
  std::vector<std::pair<int, int>> es;
  for (const auto& e : g.edges())
    es.emplace_back(static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v)));
  return make(static_cast<int>(g.vertex_count()), std::move(es));
}

namespace {

bool is_matching(const Small& g, const std::vector<int>& pick) {
  std::vector<int> seen;
  for (int i : pick) {
    seen.push_back(g.edges[static_cast<std::size_t>(i)].first);
    seen.push_back(g.edges[static_cast<std::size_t>(i)].second);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool is_clique(const Small& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adj(vs[i], vs[j])) return false;
  return true;
}

std::vector<std::vector<int>> cliques_of(const Small& g, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1U << g.n); ++s) {
    if (__builtin_popcount(s) != k) continue;
    std::vector<int> vs;
    for (int v = 0; v < g.n; ++v)
      if (s >> v & 1U) vs.push_back(v);
    if (is_clique(g, vs)) out.push_back(vs);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> matchings(const Small& g) {
  const auto m = g.edges.size();
  if (m > 24) throw std::invalid_argument("oracle: too many edges");
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    std::vector<int> pick;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1U) pick.push_back(static_cast<int>(i));
    if (is_matching(g, pick)) out.push_back(pick);
  }
  return out;
}

int matching_number(const Small& g) {
  int best = 0;
  for (const auto& m : matchings(g)) best = std::max(best, static_cast<int>(m.size()));
  return best;
}

int clique_number(const Small& g) {
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    nb[static_cast<std::size_t>(u)] |= 1U << v;
    nb[static_cast<std::size_t>(v)] |= 1U << u;
  }
  int best = 0;
  for (std::uint32_t s = 1; s < (1U << g.n); ++s) {
    bool clique = true;
    for (int v = 0; v < g.n && clique; ++v)
      if ((s >> v & 1U) && ((nb[static_cast<std::size_t>(v)] | (1U << v)) & s) != s) clique = false;
    if (clique) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

long long count_cliques(const Small& g, int k) { return static_cast<long long>(cliques_of(g, k).size()); }

bool has_clique(const Small& g, int k) { return !cliques_of(g, k).empty(); }

int clique_packing(const Small& g, int r) {
  const auto all = cliques_of(g, r);
  int best = 0;
  // Exhaustive over families, pruned only by vertex-disjointness.
  std::vector<int> used(static_cast<std::size_t>(g.n), 0);
  auto rec = [&](auto&& self, std::size_t from, int count) -> void {
    best = std::max(best, count);
    for (std::size_t i = from; i < all.size(); ++i) {
      const auto& c = all[i];
      if (std::any_of(c.begin(), c.end(), [&](int v) { return used[static_cast<std::size_t>(v)]; })) continue;
      for (int v : c) used[static_cast<std::size_t>(v)] = 1;
      self(self, i + 1, count + 1);
      for (int v : c) used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

Small cross(const Small& g, const std::vector<int>& matching) {
  std::vector<int> keep;
  for (int i : matching) {
    keep.push_back(g.edges[static_cast<std::size_t>(i)].first);
    keep.push_back(g.edges[static_cast<std::size_t>(i)].second);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (std::find(matching.begin(), matching.end(), static_cast<int>(i)) != matching.end()) continue;
    const auto [u, v] = g.edges[i];
    auto pos = [&](int x) {
      auto it = std::lower_bound(keep.begin(), keep.end(), x);
      return (it != keep.end() && *it == x) ? static_cast<int>(it - keep.begin()) : -1;
    };
    if (pos(u) >= 0 && pos(v) >= 0) es.emplace_back(pos(u), pos(v));
  }
  return make(static_cast<int>(keep.size()), es);
}

int sigma(const Small& g) {
  int best = 0;
  for (const auto& m : matchings(g)) best = std::max(best, matching_number(cross(g, m)));
  return best;
}

int kappa(const Small& g, int r) {
  int best = 0;
  for (const auto& m : matchings(g)) best = std::max(best, clique_packing(cross(g, m), r));
  return best;
}

bool isomorphic(const Small& a, const Small& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> p(static_cast<std::size_t>(a.n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges)
      if (!b.adj(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::string canonical(const Small& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) ++deg[static_cast<std::size_t>(u)], ++deg[static_cast<std::size_t>(v)];
  std::vector<int> live;
  for (int v = 0; v < g.n; ++v)
    if (deg[static_cast<std::size_t>(v)] > 0) live.push_back(v);
  std::string best;
  std::vector<int> p = live;
  do {
    std::string s = std::to_string(live.size()) + ":";
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) s += g.adj(p[i], p[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool has_copy(const Small& host, const Small& pattern) {
  if (pattern.n > host.n) return false;
  std::vector<int> image(static_cast<std::size_t>(pattern.n), -1);
  std::vector<int> used(static_cast<std::size_t>(host.n), 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == pattern.n) {
      for (const auto& [u, v] : pattern.edges)
        if (!host.adj(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) return false;
      return true;
    }
    for (int x = 0; x < host.n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = 1;
      image[static_cast<std::size_t>(i)] = x;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

SupportedCount supported(const Small& g, int r) {
  SupportedCount out;
  for (const auto& core : cliques_of(g, r)) {
    std::vector<std::vector<std::pair<int, int>>> options(core.size());
    for (std::size_t i = 0; i < core.size(); ++i)
      for (int x = 0; x < g.n; ++x)
        if (g.adj(core[i], x) && std::find(core.begin(), core.end(), x) == core.end())
          options[i].emplace_back(core[i], x);
    int systems = 0;
    std::vector<int> far;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == core.size()) {
        ++systems;
        return;
      }
      for (const auto& [c, x] : options[i]) {
        if (std::find(far.begin(), far.end(), x) != far.end()) continue;
        far.push_back(x);
        self(self, i + 1);
        far.pop_back();
      }
    };
    rec(rec, 0);
    if (systems > 0) ++out.cores;
    out.systems += systems;
  }
  return out;
}

namespace {

constexpr int kN = 10;

int pair_index(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

const std::vector<std::uint64_t>& triangle_masks() {
  static const std::vector<std::uint64_t> masks = [] {
    std::vector<std::uint64_t> out;
    for (int a = 0; a < kN; ++a)
      for (int b = a + 1; b < kN; ++b)
        for (int c = b + 1; c < kN; ++c)
          out.push_back((1ULL << pair_index(a, b)) | (1ULL << pair_index(a, c)) |
                        (1ULL << pair_index(b, c)));
    return out;
  }();
  return masks;
}

bool has_triangle(std::uint64_t e) {
  for (auto t : triangle_masks())
    if ((e & t) == t) return true;
  return false;
}

std::vector<std::pair<int, int>> pairs_in(std::uint64_t e, int n) {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (e >> pair_index(u, v) & 1ULL) out.emplace_back(u, v);
  return out;
}

bool wins(std::uint64_t e, int n, int rounds) {
  if (has_triangle(e)) return true;
  if (rounds == 0) return false;
  if (n >= kN) throw std::invalid_argument("oracle: too many vertices");
  const auto es = pairs_in(e, n);
  const auto m = es.size();
  for (std::uint32_t pick = 0; pick < (1U << m); ++pick) {
    std::uint32_t touched = 0;
    bool ok = true;
    std::uint64_t plus = e;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(pick >> i & 1U)) continue;
      const auto [u, v] = es[i];
      if (touched & ((1U << u) | (1U << v))) ok = false;
      touched |= (1U << u) | (1U << v);
      plus &= ~(1ULL << pair_index(u, v));
      plus |= (1ULL << pair_index(u, n)) | (1ULL << pair_index(v, n));
    }
    if (!ok) continue;
    const auto grown = pairs_in(plus, n + 1);
    const auto k = grown.size();
    for (std::uint64_t part = 0; part < (1ULL << k); ++part) {
      std::uint64_t a = 0, b = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto bitmask = 1ULL << pair_index(grown[i].first, grown[i].second);
        ((part >> i) & 1ULL ? b : a) |= bitmask;
      }
      if (wins(a, n + 1, rounds - 1) && wins(b, n + 1, rounds - 1)) return true;
    }
  }
  return false;
}

}  // namespace

bool forces_triangle(const Small& g, int rounds) {
  if (g.n + rounds > kN) throw std::invalid_argument("oracle: position too large");
  std::uint64_t e = 0;
  for (const auto& [u, v] : g.edges) e |= 1ULL << pair_index(u, v);
  return wins(e, g.n, rounds);
}

bool connected(const Small& g) {
  if (g.n == 0) return true;
  std::vector<int> seen(static_cast<std::size_t>(g.n), 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n; ++v)
      if (!seen[static_cast<std::size_t>(v)] && g.adj(u, v)) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s != 0; });
}

}  // namespace oracle
