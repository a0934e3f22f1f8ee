#include "dpg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace dpg {

namespace detail {

namespace {

class Canonizer {
 public:
  Canonizer(std::size_t n, std::span<const std::uint64_t> rows, std::size_t words)
      : n_(n), words_(words), rows_(rows), neighbors_(n) {
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        if (adjacent(v, u)) neighbors_[v].push_back(static_cast<int>(u));
  }

  std::string run() {
    std::vector<int> colors(n_, 0);
    std::vector<int> prefix;
    search(colors, prefix);
    std::string out;
    out.push_back(static_cast<char>(n_ & 0xff));
    out.push_back(static_cast<char>((n_ >> 8) & 0xff));
    for (auto w : best_) {
      for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((w >> shift) & 0xff));
    }
    return out;
  }

 private:
  bool adjacent(std::size_t a, std::size_t b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }

  // N(u) \ {v} == N(v) \ {u}: swapping u and v is an automorphism.
  bool twins(std::size_t u, std::size_t v) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t mask = ~std::uint64_t{0};
      if (u / 64 == w) mask &= ~(std::uint64_t{1} << (u % 64));
      if (v / 64 == w) mask &= ~(std::uint64_t{1} << (v % 64));
      if ((rows_[u * words_ + w] & mask) != (rows_[v * words_ + w] & mask)) return false;
    }
    return true;
  }

  // Equitable refinement; colours stay ranks ordered by (old colour, signature).
  int refine(std::vector<int>& colors) const {
    int cells = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    for (;;) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        for (int u : neighbors_[v]) s.push_back(colors[static_cast<std::size_t>(u)]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      std::vector<int> next(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      const int next_cells = rank + 1;
      colors = std::move(next);
      if (next_cells == cells) return cells;
      cells = next_cells;
    }
  }

  std::vector<std::uint64_t> certificate(const std::vector<int>& pos) const {
    std::vector<int> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[static_cast<std::size_t>(pos[v])] = static_cast<int>(v);
    const std::size_t bits = n_ * (n_ > 0 ? n_ - 1 : 0) / 2;
    std::vector<std::uint64_t> cert((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++k)
        if (adjacent(static_cast<std::size_t>(at[i]), static_cast<std::size_t>(at[j])))
          cert[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return cert;
  }

  void leaf(const std::vector<int>& pos) {
    auto cert = certificate(pos);
    if (!has_best_ || cert < best_) {
      best_ = std::move(cert);
      best_pos_ = pos;
      has_best_ = true;
      return;
    }
    if (cert == best_) {
      std::vector<int> best_at(n_);
      for (std::size_t v = 0; v < n_; ++v)
        best_at[static_cast<std::size_t>(best_pos_[v])] = static_cast<int>(v);
      std::vector<int> gamma(n_);
      bool identity = true;
      for (std::size_t v = 0; v < n_; ++v) {
        gamma[v] = best_at[static_cast<std::size_t>(pos[v])];
        identity = identity && gamma[v] == static_cast<int>(v);
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by stored automorphisms fixing the prefix.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[p] == p; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const int a = find(parent, static_cast<int>(v));
        const int b = find(parent, g[v]);
        if (a != b) parent[a] = b;
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(parent, static_cast<int>(v));
    return parent;
  }

  void search(std::vector<int> colors, std::vector<int>& prefix) {
    const int cells = refine(colors);
    if (static_cast<std::size_t>(cells) == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

    std::vector<int> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool skip = std::any_of(tried.begin(), tried.end(),
                              [&](int u) { return twins(static_cast<std::size_t>(u), v); });
      if (!skip && !tried.empty() && !generators_.empty()) {
        const auto orb = orbits(prefix);
        skip = std::any_of(tried.begin(), tried.end(),
                           [&](int u) { return orb[static_cast<std::size_t>(u)] == orb[v]; });
      }
      if (skip) continue;
      tried.push_back(static_cast<int>(v));
      // v becomes its own cell, ordered just before the rest of its old cell.
      std::vector<int> next(n_);
      for (std::size_t w = 0; w < n_; ++w) next[w] = 2 * colors[w] + (w == v ? 0 : 1);
      std::vector<int> ranks(next);
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      for (auto& c : next)
        c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
      prefix.push_back(static_cast<int>(v));
      search(std::move(next), prefix);
      prefix.pop_back();
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::span<const std::uint64_t> rows_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_pos_;
  bool has_best_ = false;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

std::string canonical_certificate(std::size_t n, std::span<const std::uint64_t> rows,
                                  std::size_t words) {
  if (n == 0) return std::string(2, '\0');
  return Canonizer(n, rows, words).run();
}

}  // namespace detail

CanonicalKey canonical_form(const Graph& g) {
  const auto core = g.without_isolated();
  const auto n = core.vertex_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (const auto& e : core.edges()) {
    const auto a = core.index_of(e.u);
    const auto b = core.index_of(e.v);
    rows[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    rows[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
  }
  return CanonicalKey{detail::canonical_certificate(n, rows, words)};
}

bool isomorphic_ignoring_isolated(const Graph& a, const Graph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dpg
