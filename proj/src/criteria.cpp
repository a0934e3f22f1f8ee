#include "dpg/criteria.hpp"

#include <algorithm>
#include <sstream>

#include "dpg/cliques.hpp"
#include "dpg/gadgets.hpp"
#include "dpg/matching.hpp"

namespace dpg {

namespace {

template <typename Value>
std::size_t maximize_over_matchings(const Graph& g, const CriterionOptions& opts, Value value) {
  std::size_t best = 0;
  std::size_t visited = 0;
  bool exhausted = false;
  for_each_matching(g, 0, g.vertex_count() / 2, [&](const Matching& m) {
    if (++visited > opts.matching_budget) {
      exhausted = true;
      return false;
    }
    best = std::max(best, value(cross_graph(g, m)));
    return opts.early_exit_at == 0 || best < opts.early_exit_at;
  });
  if (exhausted)
    throw CriterionNotEvaluated("criterion not evaluated: more than " +
                                std::to_string(opts.matching_budget) + " matchings");
  return best;
}

}  // namespace

std::size_t sigma(const Graph& g, const CriterionOptions& opts) {
  return maximize_over_matchings(g, opts, [](const Graph& h) { return matching_number(h); });
}

std::size_t kappa(const Graph& g, std::size_t r, const CriterionOptions& opts) {
  if (r < 2) throw InvalidInput("kappa requires r >= 2");
  return maximize_over_matchings(g, opts,
                                 [r](const Graph& h) { return clique_packing_number(h, r); });
}

bool one_round_forcing(const Graph& g, std::size_t r, const CriterionOptions& opts) {
  if (r < 2) throw InvalidInput("one_round_forcing requires r >= 2");
  if (contains_clique(g, r + 1))
    throw NotApplicable("graph contains K" + std::to_string(r + 1) +
                        "; the one-round criterion needs a K" + std::to_string(r + 1) +
                        "-free graph");
  CriterionOptions o = opts;
  o.early_exit_at = 2;
  return kappa(g, r, o) >= 2;
}

std::size_t lower_bound(const Graph& g, std::size_t k) {
  if (k < 3) throw InvalidInput("lower_bound requires k >= 3");
  const auto omega = clique_number(g);
  if (omega >= k) return 0;
  const auto r = std::max<std::size_t>(3, omega + 1);
  if (k >= r + 1) return k - r + 2;
  return 1;
}

CliqueForcingBounds bounds_report(std::size_t k) {
  if (k < 3) throw InvalidInput("bounds are defined for k >= 3");
  CliqueForcingBounds b;
  b.k = k;
  if (k == 3) {
    b.rho_lower = 1;
    b.rho_upper_witness = StrategyWitness{"C4", generate(GadgetSpec::cycle(4)), "cycle_one_round", 1};
  } else if (k == 4) {
    b.rho_lower = 3;
    auto seed = generate(GadgetSpec::rho4_seed());
    b.rho_upper_witness = StrategyWitness{"rho4seed", seed, "rho4_three_round", 3};
    b.s_upper_witness = SizeWitness{"rho4seed", seed, seed.vertex_count()};
  } else {
    b.rho_lower = k - 1;
  }
  return b;
}

std::string format_bounds(const CliqueForcingBounds& b) {
  std::ostringstream out;
  out << "k: " << b.k << '\n';
  out << "rho_lower: " << b.rho_lower << '\n';
  if (b.rho_upper_witness) {
    const auto& w = *b.rho_upper_witness;
    out << "rho_upper: " << w.rounds << '\n';
    out << "rho_upper_witness: " << w.seed_name << " via " << w.strategy << '\n';
  } else {
    out << "rho_upper: unknown\n";
  }
  if (b.s_upper_witness) {
    out << "s_upper: " << b.s_upper_witness->vertex_count << '\n';
    out << "s_upper_witness: " << b.s_upper_witness->seed_name << '\n';
  } else {
    out << "s_upper: unknown\n";
  }
  return out.str();
}

}  // namespace dpg
