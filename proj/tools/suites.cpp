#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "dpg/canonical.hpp"
#include "dpg/census.hpp"
#include "dpg/cliques.hpp"
#include "dpg/criteria.hpp"
#include "dpg/errors.hpp"
#include "dpg/gadgets.hpp"
#include "dpg/solver.hpp"
#include "dpg/strategy.hpp"
#include "dpg/supported.hpp"

namespace dpg::cli {

namespace {

class Table {
 public:
  Table(std::string suite, Format format, std::ostream& out)
      : suite_(std::move(suite)), format_(format), out_(out) {
    if (format_ == Format::kText) out_ << "suite: " << suite_ << '\n';
  }

  void note(const std::string& text) {
    if (format_ == Format::kText) out_ << "  " << text << '\n';
    else Record().add("suite", suite_).add("note", text).print(out_);
  }

  void row(const std::string& check, const std::string& expected, const std::string& observed) {
    const bool pass = expected == observed;
    ++total_;
    if (pass) ++passed_;
    if (format_ == Format::kMachine) {
      Record().add("suite", suite_).add("check", check).add("expected", expected)
          .add("observed", observed).add("status", pass ? "pass" : "fail").print(out_);
      return;
    }
    out_ << "  " << std::left << std::setw(58) << check << std::setw(26) << expected
         << std::setw(26) << observed << (pass ? "pass" : "FAIL") << '\n';
  }

  void header() {
    if (format_ == Format::kText)
      out_ << "  " << std::left << std::setw(58) << "check" << std::setw(26) << "expected"
           << std::setw(26) << "observed" << "status" << '\n';
  }

  int finish() {
    if (format_ == Format::kMachine)
      Record().add("suite", suite_).add("passed", passed_).add("total", total_).print(out_);
    else
      out_ << "summary: " << passed_ << "/" << total_ << " checks passed\n";
    return passed_ == total_ ? kOk : kCheckFailed;
  }

 private:
  std::string suite_;
  Format format_;
  std::ostream& out_;
  long long passed_ = 0;
  long long total_ = 0;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string outcome_text(const VerificationOutcome& o) {
  if (const auto* w = std::get_if<WinOnAllBranches>(&o))
    return "WinOnAllBranches(" + std::to_string(w->t_max) + ")x" + std::to_string(w->leaves);
  return "Counterexample: " + std::get<Counterexample>(o).reason;
}

std::string leaf_text(int rounds, std::size_t leaves) {
  return "WinOnAllBranches(" + std::to_string(rounds) + ")x" + std::to_string(leaves);
}

const Graph& k3() {
  static const Graph g = complete_graph(3);
  return g;
}

// ---------------------------------------------------------------- paths

int suite_paths(const VerifyConfig& c, std::ostream& out) {
  const int n_max = c.n_max < 0 ? 8 : c.n_max;
  Table t("paths", c.format, out);
  t.header();
  Solver solver(k3());
  for (int n = 3; n <= n_max; ++n) {
    const auto p = generate(GadgetSpec::path(static_cast<std::size_t>(n)));
    const std::string name = "P" + std::to_string(n);
    t.row(name + " one-round criterion", yes_no(n >= 6), yes_no(one_round_forcing(p, 2)));
    if (n <= 6)
      t.row(name + " solver (cap 1)", n >= 6 ? "WinsIn(1)" : "SurvivesCap(1)",
            to_string(solver.solve(p, 1).verdict));
    if (n >= 6)
      t.row(name + " path_one_round", leaf_text(1, 2),
            outcome_text(verify_strategy(p, scripted("path_one_round"), k3(), 1)));
  }
  return t.finish();
}

// ---------------------------------------------------------------- cycles

int expected_cycle_tau(int n) { return n == 3 ? 0 : n == 5 ? 2 : 1; }

int suite_cycles(const VerifyConfig& c, std::ostream& out) {
  const int n_max = c.n_max < 0 ? 8 : c.n_max;
  Table t("cycles", c.format, out);
  t.header();
  Solver solver(k3());
  for (int n = 3; n <= n_max; ++n) {
    const auto g = generate(GadgetSpec::cycle(static_cast<std::size_t>(n)));
    const std::string name = "C" + std::to_string(n);
    const auto want = "WinsIn(" + std::to_string(expected_cycle_tau(n)) + ")";
    if (n <= 6) {
      t.row(name + " tau (exact, cap 3)", want, to_string(solver.solve(g, 3).verdict));
    } else {
      // Triangle-free with a one-round forcing move pins the value at 1.
      std::string got = contains_clique(g, 3) ? "WinsIn(0)"
                        : one_round_win(g, k3())  ? "WinsIn(1)"
                                                  : "not one-round";
      t.row(name + " tau (one-round shortcut)", want, got);
    }
    if (n >= 4) {
      const bool five = n == 5;
      const auto script = scripted(five ? "c5_two_round" : "cycle_one_round");
      const auto leaves = five ? 3 : 2;  // the triangle side of the C5 round ends early
      t.row(name + " " + script.name, leaf_text(five ? 2 : 1, static_cast<std::size_t>(leaves)),
            outcome_text(verify_strategy(g, script, k3(), script.declared_rounds)));
    }
  }
  return t.finish();
}

// ---------------------------------------------------------------- rho4

int suite_rho4(const VerifyConfig& c, std::ostream& out) {
  Table t("rho4", c.format, out);
  t.header();
  const auto seed = generate(GadgetSpec::rho4_seed());
  const auto report = certify(seed, {claim::TriangleFree{}, claim::VertexCount{48}, claim::EdgeCount{48}});
  for (const auto& r : report.results)
    t.row("seed " + r.claim, "pass", r.pass ? "pass" : "fail: " + r.witness);

  const auto k4 = complete_graph(4);
  const auto script = scripted("rho4_three_round");
  t.row("upper bound: rho4_three_round vs K4", leaf_text(3, 8),
        outcome_text(verify_strategy(seed, script, k4, 3)));

  const GameState s0(seed);
  const auto first = script.move_fn(s0);
  const auto h = canonical_form(generate(GadgetSpec::fan_h()));
  for (auto choice : {ChooserChoice::kKeepA, ChooserChoice::kKeepB}) {
    const auto s1 = play_round(s0, first, choice);
    t.row(std::string("round-1 side ") + (choice == ChooserChoice::kKeepA ? "A" : "B") + " is H",
          "true", yes_no(canonical_form(s1.graph()) == h));
  }

  t.row("lower_bound(seed, K4)", "3", std::to_string(lower_bound(seed, 4)));
  CensusFilter probes{true, false, 7};
  const auto family = graphs_up_to_isomorphism_through(6, probes);
  Solver solver(k4);
  std::size_t survived = 0;
  for (const auto& g : family)
    if (std::holds_alternative<SurvivesCap>(solver.solve(g, 2).verdict)) ++survived;
  t.row("K4 probes (triangle-free, <=6 v, <=7 e) survive cap 2",
        std::to_string(family.size()) + "/" + std::to_string(family.size()),
        std::to_string(survived) + "/" + std::to_string(family.size()));

  const auto b = bounds_report(4);
  t.row("bounds: rho(4) lower", "3", std::to_string(b.rho_lower));
  t.row("bounds: rho(4) upper", "3", b.rho_upper_witness ? std::to_string(b.rho_upper_witness->rounds) : "unknown");
  t.row("bounds: s(4) upper", "48", b.s_upper_witness ? std::to_string(b.s_upper_witness->vertex_count) : "unknown");
  return t.finish();
}

// ---------------------------------------------------------------- lemma-h

bool edges_disjoint(std::vector<Edge> a, std::vector<Edge> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Edge> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

int suite_lemma_h(const VerifyConfig& c, std::ostream& out) {
  Table t("lemma-h", c.format, out);
  t.header();
  const auto h = generate(GadgetSpec::fan_h());
  t.row("H vertices", "25", std::to_string(h.vertex_count()));
  t.row("H edges", "28", std::to_string(h.edge_count()));
  t.row("H clique number", "3", std::to_string(clique_number(h)));
  t.row("H triangles", "4", std::to_string(cliques_of_size(h, 3).size()));
  t.row("H supported triangle cores", "4", std::to_string(find_supported_copies(h, 3).size()));
  t.row("H holds a compatible pair", "false", yes_no(find_compatible_pair(h, 3).has_value()));

  const GameState s(h);
  const auto fan = fan_h_move(s);
  t.row("bundles edge-disjoint", "true", yes_no(edges_disjoint(fan.bundle_a, fan.bundle_b)));
  const auto inter = s.grow(fan.move.matching);
  for (auto choice : {ChooserChoice::kKeepA, ChooserChoice::kKeepB}) {
    const auto side = choice == ChooserChoice::kKeepA ? "A" : "B";
    const auto& bundle = choice == ChooserChoice::kKeepA ? fan.bundle_a : fan.bundle_b;
    const auto kept = apply_choice(inter.graph, fan.move, choice);
    const auto pair = find_compatible_pair(kept, 3);
    t.row(std::string("side ") + side + " compatible supported pair", "true", yes_no(pair.has_value()));
    // The bundle alone must already carry the pair.
    const auto bundle_graph = inter.graph.with_edges(bundle);
    t.row(std::string("side ") + side + " bundle alone carries the pair", "true",
          yes_no(find_compatible_pair(bundle_graph, 3).has_value()));
  }
  return t.finish();
}

// ---------------------------------------------------------------- lower-bounds

int suite_lower_bounds(const VerifyConfig& c, std::ostream& out) {
  const int n_max = c.n_max < 0 ? 5 : c.n_max;
  Table t("lower-bounds", c.format, out);
  t.header();
  for (std::size_t k = 3; k <= 6; ++k) {
    const auto b = bounds_report(k);
    t.row("rho(" + std::to_string(k) + ") lower", std::to_string(k == 3 ? 1 : k - 1),
          std::to_string(b.rho_lower));
  }
  const auto seeds = graphs_up_to_isomorphism_through(static_cast<std::size_t>(n_max));
  for (std::size_t k = 3; k <= 4; ++k) {
    Solver solver(complete_graph(k));
    std::size_t consistent = 0, checked = 0;
    for (const auto& g : seeds) {
      const auto lb = static_cast<int>(lower_bound(g, k));
      if (lb == 0) {
        ++checked;
        if (contains_clique(g, k)) ++consistent;
        continue;
      }
      if (lb - 1 > 2) continue;
      ++checked;
      const auto v = solver.solve(g, lb - 1).verdict;
      if (std::holds_alternative<SurvivesCap>(v)) ++consistent;
    }
    t.row("K" + std::to_string(k) + ": solver respects lower bound (<=" + std::to_string(n_max) + " v)",
          std::to_string(checked) + "/" + std::to_string(checked),
          std::to_string(consistent) + "/" + std::to_string(checked));
  }
  return t.finish();
}

// ---------------------------------------------------------------- omega-growth

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (edge(rng)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

std::optional<BuilderMove> random_move(std::mt19937_64& rng, const GameState& s) {
  std::vector<Edge> edges(s.graph().edges().begin(), s.graph().edges().end());
  if (edges.empty()) return std::nullopt;
  std::shuffle(edges.begin(), edges.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> m;
  for (const auto& e : edges) {
    const bool clash = std::any_of(m.begin(), m.end(), [&](const Edge& f) { return f.shares_endpoint(e); });
    if (!clash && (m.empty() || coin(rng))) m.push_back(e);
  }
  auto matching = Matching::of(s.graph(), m);
  const auto inter = s.grow(matching);
  std::vector<Edge> a, b;
  for (const auto& e : inter.graph.edges()) (coin(rng) ? b : a).push_back(e);
  return BuilderMove{std::move(matching), std::move(a), std::move(b)};
}

int suite_omega_growth(const VerifyConfig& c, std::ostream& out) {
  Table t("omega-growth", c.format, out);
  t.note("rng seed " + std::to_string(c.rng));
  t.header();
  std::mt19937_64 rng(c.rng);
  std::uniform_int_distribution<std::size_t> order(1, 8);
  std::uniform_int_distribution<int> length(1, 4);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  std::bernoulli_distribution coin(0.5);
  const int plays = 1000;
  int violations = 0, rounds_played = 0;
  for (int i = 0; i < plays; ++i) {
    GameState s(random_graph(rng, order(rng), density(rng)));
    const auto omega0 = clique_number(s.graph());
    const int len = length(rng);
    for (int r = 0; r < len; ++r) {
      auto move = random_move(rng, s);
      if (!move) break;
      s = play_round(s, *move, coin(rng) ? ChooserChoice::kKeepB : ChooserChoice::kKeepA);
      ++rounds_played;
      if (clique_number(s.graph()) > omega0 + static_cast<std::size_t>(s.round())) ++violations;
    }
  }
  t.note(std::to_string(plays) + " plays, " + std::to_string(rounds_played) + " rounds");
  t.row("omega(G_t) <= omega(G_0) + t violations", "0", std::to_string(violations));
  return t.finish();
}

// ---------------------------------------------------------------- promotion

struct PlantedPair {
  Graph host;
  SupportedCopy first;
  SupportedCopy second;
};

// Two compatible supported K_r planted in a random host on shuffled ids.
PlantedPair plant_pair(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<std::size_t> extra(0, 6);
  const std::size_t n = 4 * r + extra(rng);
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0U);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  auto plant = [&](std::size_t base) {
    SupportedCopy c;
    c.pattern_order = r;
    std::vector<std::pair<VertexId, Edge>> rows;
    for (std::size_t i = 0; i < r; ++i) {
      const auto v = ids[base + i], leaf = ids[base + r + i];
      for (std::size_t j = i + 1; j < r; ++j) es.emplace_back(v, ids[base + j]);
      es.emplace_back(v, leaf);
      rows.emplace_back(VertexId{v}, Edge::of(v, leaf));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [v, e] : rows) {
      c.core.push_back(v);
      c.support.push_back(e);
    }
    return c;
  };
  auto c1 = plant(0);
  auto c2 = plant(2 * r);
  std::bernoulli_distribution noise(0.25);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (noise(rng)) es.emplace_back(u, v);
  std::sort(es.begin(), es.end(), [](auto x, auto y) {
    return std::minmax(x.first, x.second) < std::minmax(y.first, y.second);
  });
  es.erase(std::unique(es.begin(), es.end(), [](auto x, auto y) {
             return std::minmax(x.first, x.second) == std::minmax(y.first, y.second);
           }), es.end());
  return {Graph::from_edges(n, es), std::move(c1), std::move(c2)};
}

int suite_promotion(const VerifyConfig& c, std::ostream& out) {
  Table t("promotion", c.format, out);
  t.note("rng seed " + std::to_string(c.rng));
  t.header();
  std::mt19937_64 rng(c.rng);
  const int trials = 100;
  for (std::size_t r : {3U, 4U}) {
    int ok = 0;
    for (int i = 0; i < trials; ++i) {
      const auto p = plant_pair(rng, r);
      if (!is_supported_copy(p.host, p.first) || !is_supported_copy(p.host, p.second) ||
          !compatible(p.first, p.second))
        continue;
      const GameState s(p.host);
      const auto move = promote(s, p.first, p.second);
      bool both = true;
      for (auto choice : {ChooserChoice::kKeepA, ChooserChoice::kKeepB})
        both = both && contains_clique(play_round(s, move, choice).graph(), r + 1);
      if (both) ++ok;
    }
    t.row("r=" + std::to_string(r) + ": K" + std::to_string(r + 1) + " on both branches",
          std::to_string(trials) + "/" + std::to_string(trials),
          std::to_string(ok) + "/" + std::to_string(trials));
  }
  return t.finish();
}

// ---------------------------------------------------------------- one-round-criterion

int suite_one_round(const VerifyConfig& c, std::ostream& out) {
  const int n_max = c.n_max < 0 ? 7 : c.n_max;
  Table t("one-round-criterion", c.format, out);
  t.header();
  Solver solver(k3());
  for (int n = 1; n <= n_max; ++n) {
    const auto family = graphs_up_to_isomorphism(static_cast<std::size_t>(n), {true, true});
    std::size_t agree = 0, forcing = 0;
    for (const auto& g : family) {
      const bool by_sigma = sigma(g) >= 2;
      const bool by_solver = solver.wins_within(g, 1);
      if (by_sigma == by_solver) ++agree;
      if (by_solver) ++forcing;
    }
    t.row("n=" + std::to_string(n) + ": sigma>=2 iff WinsIn(1) (" + std::to_string(forcing) +
              " forcing)",
          std::to_string(family.size()) + "/" + std::to_string(family.size()),
          std::to_string(agree) + "/" + std::to_string(family.size()));
  }
  return t.finish();
}

using Suite = std::function<int(const VerifyConfig&, std::ostream&)>;

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"paths", suite_paths},
      {"cycles", suite_cycles},
      {"rho4", suite_rho4},
      {"lemma-h", suite_lemma_h},
      {"lower-bounds", suite_lower_bounds},
      {"omega-growth", suite_omega_growth},
      {"promotion", suite_promotion},
      {"one-round-criterion", suite_one_round},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  if (c.suite == "all") {
    int status = kOk;
    for (const auto& [name, fn] : registry()) {
      VerifyConfig one = c;
      one.suite = name;
      one.n_max = -1;
      if (fn(one, out) != kOk) status = kCheckFailed;
    }
    return status;
  }
  for (const auto& [name, fn] : registry())
    if (name == c.suite) return fn(c, out);
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown suite '" + c.suite + "' (available: " + known + ", all)");
}

}  // namespace dpg::cli
