#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "dpg/graph.hpp"

namespace dpg {

/// Isomorphism-invariant key. Two graphs get equal keys iff they are
/// isomorphic once isolated vertices are removed.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Colour refinement plus individualization search with automorphism and
/// twin pruning; the lexicographically smallest adjacency certificate wins.
CanonicalKey canonical_form(const Graph& g);

bool isomorphic_ignoring_isolated(const Graph& a, const Graph& b);

namespace detail {

/// Certificate of a dense graph given as `n` bit rows of `words` 64-bit words.
/// Isolated vertices are NOT dropped here; callers do that.
std::string canonical_certificate(std::size_t n, std::span<const std::uint64_t> rows,
                                  std::size_t words);

}  // namespace detail

}  // namespace dpg

template <>
struct std::hash<dpg::CanonicalKey> {
  std::size_t operator()(const dpg::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
