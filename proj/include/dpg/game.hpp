#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dpg/graph.hpp"
#include "dpg/matching.hpp"

namespace dpg {

/// Chooser keeps part A (bit 0) or part B (bit 1).
enum class ChooserChoice : std::uint8_t { kKeepA = 0, kKeepB = 1 };

inline int bit(ChooserChoice c) { return static_cast<int>(c); }
/// Throws InvalidInput unless b is 0 or 1.
ChooserChoice choice_from_bit(int b);

/// One round of Builder decisions: the matching used for growth and the
/// bipartition of the resulting intermediate graph's edges.
struct BuilderMove {
  Matching matching;
  std::vector<Edge> part_a;  // sorted
  std::vector<Edge> part_b;  // sorted

  friend bool operator==(const BuilderMove&, const BuilderMove&) = default;
};

/// G+ together with the vertex the growth step created.
struct Intermediate {
  Graph graph;
  VertexId new_vertex;
};

/// Degree-preserving growth: G - M plus a new vertex joined to every endpoint of M.
/// The new vertex gets id `g.next_vertex_id()` and provenance CreatedAtRound(round).
Intermediate dpg_step(const Graph& g, const Matching& m, int round);

/// Throws InvalidInput, naming missing and duplicated edges, unless
/// part_a and part_b partition E(intermediate).
void validate_bipartition(const Graph& intermediate, const BuilderMove& move);

/// (V(G+), E^(c)).
Graph apply_choice(const Graph& intermediate, const BuilderMove& move, ChooserChoice c);

/// Builds a move on `intermediate` from the two essential bundles; every
/// intermediate edge in neither bundle goes to part A. Throws InvalidInput if
/// the bundles overlap or contain non-edges.
BuilderMove assemble_move(const Graph& intermediate, Matching m, std::vector<Edge> bundle_a,
                          std::vector<Edge> bundle_b);

struct RoundRecord {
  BuilderMove move;
  ChooserChoice choice;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

using Transcript = std::vector<RoundRecord>;

/// Immutable game position: current graph, rounds played and how we got here.
class GameState {
 public:
  explicit GameState(Graph seed);

  const Graph& graph() const { return graph_; }
  int round() const { return round_; }
  const Transcript& transcript() const { return transcript_; }
  std::size_t seed_clique_number() const { return seed_omega_; }

  /// Intermediate graph of the next round for matching m (does not advance).
  Intermediate grow(const Matching& m) const { return dpg_step(graph_, m, round_ + 1); }

 private:
  friend GameState play_round(const GameState&, const BuilderMove&, ChooserChoice);
  GameState() = default;

  Graph graph_;
  int round_ = 0;
  Transcript transcript_;
  std::size_t seed_omega_ = 0;
};

/// dpg_step + apply_choice; checks the provenance and clique-growth
/// invariants of the resulting state (std::logic_error if broken).
GameState play_round(const GameState& s, const BuilderMove& move, ChooserChoice c);

/// target embeds in the current (kept) graph.
bool is_win(const GameState& s, const Graph& target);
bool is_win(const Graph& g, const Graph& target);

}  // namespace dpg
