#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg {

/// A named Builder strategy transcribed from a constructive argument.
struct StrategyScript {
  std::string name;
  /// Human-readable seed family, used in rejection messages.
  std::string family;
  /// nullopt if the seed (isolated vertices ignored) is in the family, else the reason.
  std::function<std::optional<std::string>(const Graph&)> reject_seed;
  /// Throws NotApplicable on states the script does not cover.
  std::function<BuilderMove(const GameState&)> move_fn;
  int declared_rounds = 0;
};

/// path_one_round, cycle_one_round, c5_two_round, fan_h_round, rho4_three_round.
std::vector<std::string> strategy_names();
/// Throws InvalidInput listing the known names.
StrategyScript scripted(const std::string& name);

/// The fan round on a position whose non-isolated part is the gadget H,
/// with the two bundles that make each side carry two compatible supported
/// triangles. `move` assigns leftover edges to part A.
struct FanRound {
  BuilderMove move;
  std::vector<Edge> bundle_a;
  std::vector<Edge> bundle_b;
};
FanRound fan_h_move(const GameState& s);

/// Win condition for verification and play: a pattern copy, or a pair of
/// compatible supported r-cliques.
struct PatternTarget {
  Graph pattern;
};
struct SupportedPairTarget {
  std::size_t r = 3;
};
using WinPredicate = std::variant<PatternTarget, SupportedPairTarget>;

bool holds(const WinPredicate& p, const Graph& g);
/// K4, supported-pair:3, or pattern(n=.., m=..).
std::string describe(const WinPredicate& p);
/// `K<k>`, `supported-pair:<r>`, otherwise an edge-list file path.
WinPredicate parse_win_predicate(const std::string& text);

struct WinOnAllBranches {
  int t_max = 0;             // latest round at which a branch first satisfied the target
  std::size_t leaves = 0;    // branches visited
};
struct Counterexample {
  Transcript transcript;
  std::string reason;
};
using VerificationOutcome = std::variant<WinOnAllBranches, Counterexample>;

/// One leaf of the Chooser tree.
struct Branch {
  GameState state;
  bool won = false;
  int won_at = -1;
  std::string failure;  // illegal move or target absent; empty when won
};

/// Plays `script` from `seed` against every Chooser bit-string (part A first).
/// A branch ends when the target holds or after `rounds` rounds. The visitor
/// returns false to stop. Throws FamilyMismatch for a seed outside the
/// script's family and InvalidInput if rounds exceeds the declared rounds.
void explore_branches(const Graph& seed, const StrategyScript& script, const WinPredicate& target,
                      int rounds, const std::function<bool(const Branch&)>& visit);

/// WinOnAllBranches, or the first failing branch in deterministic order.
VerificationOutcome verify_strategy(const Graph& seed, const StrategyScript& script,
                                    const WinPredicate& target, int rounds);
VerificationOutcome verify_strategy(const Graph& seed, const StrategyScript& script,
                                    const Graph& target, int rounds);

}  // namespace dpg
