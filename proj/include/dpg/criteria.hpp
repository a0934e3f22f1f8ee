#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dpg/errors.hpp"
#include "dpg/graph.hpp"

namespace dpg {

/// Thrown when sigma/kappa cannot settle the question within the matching budget.
class CriterionNotEvaluated : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

struct CriterionOptions {
  /// Stop maximizing once this value is reached; 0 disables early exit.
  std::size_t early_exit_at = 2;
  /// Maximum number of matchings examined before giving up.
  std::size_t matching_budget = 2'000'000;
};

/// max over matchings M of nu(G[V(M)] - M).
std::size_t sigma(const Graph& g, const CriterionOptions& opts = {});

/// max over matchings M of the K_r packing number of G[V(M)] - M (r >= 2).
std::size_t kappa(const Graph& g, std::size_t r, const CriterionOptions& opts = {});

/// For K_{r+1}-free g: whether Builder forces K_{r+1} in exactly one round,
/// decided by kappa_r(g) >= 2. Throws NotApplicable if g contains K_{r+1}.
bool one_round_forcing(const Graph& g, std::size_t r, const CriterionOptions& opts = {});

/// Lower bound on the forcing time of K_k from g (k >= 3): 0 if K_k is
/// already present, otherwise k - r + 2 with r = max(3, omega(g) + 1) when
/// k >= r + 1, else 1.
std::size_t lower_bound(const Graph& g, std::size_t k);

struct StrategyWitness {
  std::string seed_name;
  Graph seed;
  std::string strategy;
  std::size_t rounds = 0;
};

struct SizeWitness {
  std::string seed_name;
  Graph seed;
  std::size_t vertex_count = 0;
};

/// What is known about rho(k) and s(k) (forcing time and seed size for K_k
/// from triangle-free seeds). Missing witnesses mean "unknown".
struct CliqueForcingBounds {
  std::size_t k = 0;
  std::size_t rho_lower = 0;
  std::optional<StrategyWitness> rho_upper_witness;
  std::optional<SizeWitness> s_upper_witness;
};

CliqueForcingBounds bounds_report(std::size_t k);

/// `key: value` lines for the CLI.
std::string format_bounds(const CliqueForcingBounds& b);

}  // namespace dpg
