#include <doctest.h>

#include "dpg/census.hpp"
#include "dpg/cliques.hpp"
#include "dpg/criteria.hpp"
#include "dpg/errors.hpp"
#include "dpg/gadgets.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dpg;

TEST_CASE("sigma and kappa match the oracle exactly (no early exit)") {
  CriterionOptions full;
  full.early_exit_at = 0;
  for (const auto& g : graphs_up_to_isomorphism_through(6)) {
    const auto o = oracle::from(g);
    CHECK(sigma(g, full) == static_cast<std::size_t>(oracle::sigma(o)));
    CHECK(kappa(g, 2, full) == sigma(g, full));
    CHECK(kappa(g, 3, full) == static_cast<std::size_t>(oracle::kappa(o, 3)));
  }
}

TEST_CASE("paths and cycles") {
  for (std::size_t n = 3; n <= 9; ++n) {
    CHECK(one_round_forcing(generate(GadgetSpec::path(n)), 2) == (n >= 6));
    if (n >= 4) CHECK(one_round_forcing(generate(GadgetSpec::cycle(n)), 2) == (n != 5));
  }
  CriterionOptions full;
  full.early_exit_at = 0;
  CHECK(sigma(generate(GadgetSpec::path(5)), full) == 1);
  CHECK(sigma(generate(GadgetSpec::path(6)), full) == 2);
  CHECK(sigma(generate(GadgetSpec::cycle(5)), full) == 1);
}

TEST_CASE("one_round_forcing refuses graphs that already contain the target") {
  CHECK_THROWS_AS(one_round_forcing(complete_graph(3), 2), NotApplicable);
  CHECK_THROWS_AS(one_round_forcing(complete_graph(4), 3), NotApplicable);
  CHECK_THROWS_AS(kappa(complete_graph(3), 1), InvalidInput);
}

TEST_CASE("matching budget gives CriterionNotEvaluated instead of a guess") {
  CriterionOptions tiny;
  tiny.matching_budget = 3;
  CHECK_THROWS_AS(sigma(generate(GadgetSpec::cycle(9)), tiny), CriterionNotEvaluated);
  CHECK_THROWS_AS(sigma(generate(GadgetSpec::cycle(9)), tiny), BudgetExceeded);
}

TEST_CASE("lower bounds") {
  const auto c5 = generate(GadgetSpec::cycle(5));
  CHECK(lower_bound(c5, 3) == 1);
  CHECK(lower_bound(c5, 4) == 3);
  CHECK(lower_bound(c5, 6) == 5);
  CHECK(lower_bound(complete_graph(3), 3) == 0);
  CHECK(lower_bound(complete_graph(3), 4) == 1);
  CHECK(lower_bound(complete_graph(3), 5) == 3);
  CHECK(lower_bound(generate(GadgetSpec::rho4_seed()), 4) == 3);
  CHECK_THROWS_AS(lower_bound(c5, 2), InvalidInput);
}

TEST_CASE("bounds report") {
  const auto b3 = bounds_report(3);
  CHECK(b3.rho_lower == 1);
  REQUIRE(b3.rho_upper_witness.has_value());
  CHECK(b3.rho_upper_witness->rounds == 1);
  CHECK(b3.rho_upper_witness->strategy == "cycle_one_round");

  const auto b4 = bounds_report(4);
  CHECK(b4.rho_lower == 3);
  REQUIRE(b4.rho_upper_witness.has_value());
  CHECK(b4.rho_upper_witness->rounds == 3);
  REQUIRE(b4.s_upper_witness.has_value());
  CHECK(b4.s_upper_witness->vertex_count == 48);
  CHECK(format_bounds(b4).find("s_upper: 48") != std::string::npos);

  const auto b7 = bounds_report(7);
  CHECK(b7.rho_lower == 6);
  CHECK_FALSE(b7.rho_upper_witness.has_value());
  CHECK(format_bounds(b7).find("rho_upper: unknown") != std::string::npos);
  CHECK_THROWS_AS(bounds_report(2), InvalidInput);
}
