#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

struct SolverOptions {
  bool memoize = true;
  /// Skip matchings whose intermediate graph is isomorphic to an earlier one.
  bool dedup_moves = true;
  /// Fix the first intermediate edge to part A (the swapped partition is the same move).
  bool halve_partitions = true;
  /// Larger intermediate graphs are not partitioned exhaustively (BudgetExceeded).
  std::size_t max_partition_edges = 22;
  /// Positions + matchings + partitions examined before BudgetExceeded; 0 = unlimited.
  std::uint64_t work_budget = 0;
  bool principal_variation = true;
};

struct WinsIn {
  int rounds = 0;
  friend bool operator==(const WinsIn&, const WinsIn&) = default;
};
struct SurvivesCap {
  int cap = 0;
  friend bool operator==(const SurvivesCap&, const SurvivesCap&) = default;
};
using Verdict = std::variant<WinsIn, SurvivesCap>;

/// "WinsIn(2)" / "SurvivesCap(3)".
std::string to_string(const Verdict& v);

struct SolveStats {
  std::uint64_t positions = 0;  // calls into the bounded search
  std::uint64_t matchings = 0;
  std::uint64_t partitions = 0;
  std::uint64_t memo_hits = 0;
};

struct SolveResult {
  Verdict verdict;
  /// Builder's first winning moves with Chooser's most delaying replies
  /// (ties toward part A). Empty for SurvivesCap and for WinsIn(0).
  Transcript principal_variation;
  SolveStats stats;
};

/// Bounded exhaustive minimax for the forcing time of one target.
///
/// A Solver keeps its transposition table (keyed by canonical form, which
/// ignores isolated vertices) across calls, so batches over many seeds
/// share work. Positions are limited to 64 vertices including the vertices
/// created during search.
class Solver {
 public:
  explicit Solver(Graph target, SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// tau_target(seed) if it is at most cap, else SurvivesCap(cap).
  /// Throws BudgetExceeded rather than guessing.
  SolveResult solve(const Graph& seed, int cap);

  /// True iff Builder forces the target from g within `rounds` rounds.
  bool wins_within(const Graph& g, int rounds);

  const Graph& target() const;
  const SolveStats& stats() const;
  std::size_t memo_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult solve(const Graph& seed, const Graph& target, int cap, const SolverOptions& options = {});

/// A one-round forcing move: the first nonempty matching (lexicographic)
/// whose intermediate graph holds two edge-disjoint target copies; one copy
/// goes to each part, remaining edges to part A.
std::optional<BuilderMove> one_round_win(const Graph& g, const Graph& target);

/// Chooser's reply maximizing the kept side's forcing time (SurvivesCap
/// counts as largest); ties keep part A.
ChooserChoice best_chooser_choice(const Graph& intermediate, const BuilderMove& move,
                                  const Graph& target, int cap, const SolverOptions& options = {});

}  // namespace dpg
