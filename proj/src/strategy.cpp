#include "dpg/strategy.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "dpg/copies.hpp"
#include "dpg/errors.hpp"
#include "dpg/gadgets.hpp"
#include "dpg/graph_io.hpp"
#include "dpg/supported.hpp"

namespace dpg {

namespace {

// Family labels resolved on the current position; "w" is the vertex the
// coming growth step will create.
class Labels {
 public:
  Labels(const Graph& family, const Embedding& image, VertexId w) : w_(w) {
    for (std::size_t i = 0; i < family.vertex_count(); ++i)
      map_.emplace(family.vertices()[i].label, image[i]);
  }
  VertexId operator()(const std::string& label) const {
    if (label == "w") return w_;
    auto it = map_.find(label);
    if (it == map_.end()) throw std::logic_error("strategy uses unknown label " + label);
    return it->second;
  }
  Edge edge(const std::string& a, const std::string& b) const { return Edge::of((*this)(a), (*this)(b)); }
  std::vector<Edge> triangle(const std::string& a, const std::string& b, const std::string& c) const {
    return {edge(a, b), edge(b, c), edge(a, c)};
  }

 private:
  std::map<std::string, VertexId> map_;
  VertexId w_;
};

std::optional<Labels> match_family(const Graph& family, const GameState& s) {
  auto core = s.graph().without_isolated();
  auto iso = find_isomorphism(family, core);
  if (!iso) return std::nullopt;
  return Labels(family, *iso, s.graph().next_vertex_id());
}

Labels require_family(const Graph& family, const GameState& s, const std::string& what) {
  auto l = match_family(family, s);
  if (!l) throw NotApplicable("position is not " + what);
  return *l;
}

void append(std::vector<Edge>& to, const std::vector<Edge>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Grows on `matching` and splits with the two bundles; the rest goes to A.
BuilderMove make_move(const GameState& s, std::vector<Edge> matching, std::vector<Edge> bundle_a,
                      std::vector<Edge> bundle_b) {
  auto m = Matching::of(s.graph(), std::move(matching));
  auto inter = s.grow(m);
  return assemble_move(inter.graph, std::move(m), std::move(bundle_a), std::move(bundle_b));
}

std::string v(int i) { return "v" + std::to_string(i); }

std::size_t core_order(const Graph& g) { return g.without_isolated().vertex_count(); }

std::optional<std::string> reject_unless_isomorphic(const Graph& seed, const Graph& family,
                                                    const std::string& what) {
  if (find_isomorphism(family, seed.without_isolated())) return std::nullopt;
  return "seed is not " + what;
}

// --- path_one_round -------------------------------------------------------

BuilderMove path_move(const GameState& s) {
  const auto n = core_order(s.graph());
  if (n < 6) throw NotApplicable("path_one_round needs P_n with n >= 6");
  auto L = require_family(generate(GadgetSpec::path(n)), s, "a path");
  return make_move(s, {L.edge(v(1), v(2)), L.edge(v(3), v(4)), L.edge(v(5), v(6))},
                   L.triangle("w", v(2), v(3)), L.triangle("w", v(4), v(5)));
}

// --- cycle_one_round ------------------------------------------------------

BuilderMove cycle_move(const GameState& s) {
  const auto n = core_order(s.graph());
  if (n < 4) throw NotApplicable("cycle_one_round needs C_n with n >= 4");
  auto L = require_family(generate(GadgetSpec::cycle(n)), s, "a cycle");
  std::vector<Edge> m{L.edge(v(1), v(2)), L.edge(v(3), v(4))};
  std::vector<Edge> b;
  if (n == 4) {
    b = L.triangle("w", v(4), v(1));
  } else if (n == 5) {
    // The two-edge matching leaves only one triangle; keep what exists of wv4v5.
    b = {L.edge("w", v(4)), L.edge(v(4), v(5))};
  } else {
    m.push_back(L.edge(v(5), v(6)));
    b = L.triangle("w", v(4), v(5));
  }
  return make_move(s, std::move(m), L.triangle("w", v(2), v(3)), std::move(b));
}

// --- c5_two_round ---------------------------------------------------------

BuilderMove c5_move(const GameState& s) {
  if (s.round() == 0) {
    auto L = require_family(generate(GadgetSpec::cycle(5)), s, "C5");
    std::vector<Edge> quad{L.edge("w", v(1)), L.edge(v(1), v(5)), L.edge(v(5), v(4)),
                           L.edge(v(4), "w")};
    return make_move(s, {L.edge(v(1), v(2)), L.edge(v(3), v(4))}, L.triangle("w", v(2), v(3)),
                     std::move(quad));
  }
  if (s.round() == 1) {
    if (!match_family(generate(GadgetSpec::cycle(4)), s))
      throw NotApplicable("c5_two_round expects the 4-cycle after round 1");
    return cycle_move(s);
  }
  throw NotApplicable("c5_two_round covers two rounds");
}

// --- fan_h_round ----------------------------------------------------------

BuilderMove fan_move(const GameState& s) { return fan_h_move(s).move; }

// --- rho4_three_round -----------------------------------------------------

std::string c(int i) { return "c" + std::to_string((i - 1) % 16 + 1); }

BuilderMove rho4_first_round(const GameState& s) {
  auto L = require_family(generate(GadgetSpec::rho4_seed()), s, "the rho4 seed");
  std::vector<Edge> m;
  for (int i = 1; i <= 15; i += 2) m.push_back(L.edge(c(i), c(i + 1)));
  // Fan triangles w c_i c_{i+1} for even i; the first four go to A.
  auto fan_side = [&](int from, int to) {
    std::vector<Edge> out;
    for (int i = from; i <= to; i += 2) {
      append(out, L.triangle("w", c(i), c(i + 1)));
      for (int j : {i, i + 1})
        for (const char* suffix : {"'", "''"}) out.push_back(L.edge(c(j), c(j) + suffix));
    }
    return out;
  };
  return make_move(s, std::move(m), fan_side(2, 8), fan_side(10, 16));
}

BuilderMove rho4_move(const GameState& s) {
  switch (s.round()) {
    case 0:
      return rho4_first_round(s);
    case 1:
      return fan_h_move(s).move;
    case 2: {
      auto pair = find_compatible_pair(s.graph(), 3);
      if (!pair) throw NotApplicable("no compatible pair of supported triangles after round 2");
      return promote(s, pair->first, pair->second);
    }
    default:
      throw NotApplicable("rho4_three_round covers three rounds");
  }
}

std::optional<std::string> reject_path(const Graph& seed) {
  const auto n = core_order(seed);
  if (n < 6) return "seed has " + std::to_string(n) + " non-isolated vertices; need P_n with n >= 6";
  return reject_unless_isomorphic(seed, generate(GadgetSpec::path(n)), "a path");
}

std::optional<std::string> reject_cycle(const Graph& seed) {
  const auto n = core_order(seed);
  if (n < 4) return "seed has " + std::to_string(n) + " non-isolated vertices; need C_n with n >= 4";
  return reject_unless_isomorphic(seed, generate(GadgetSpec::cycle(n)), "a cycle");
}

}  // namespace

FanRound fan_h_move(const GameState& s) {
  auto L = require_family(generate(GadgetSpec::fan_h()), s, "the fan gadget H");
  auto leaf = [&](const std::string& x, const char* suffix) { return L.edge(x, x + suffix); };
  std::vector<Edge> m{leaf("a3", "'"), leaf("b3", "'"), leaf("a4", "'"), leaf("b4", "'")};

  // Side A: T0 = z a1 b1 supported by a1a1'', b1b1'', za4;
  //         U0 = w a3 b3 supported by a3a3'', b3b3'', wa4'.
  std::vector<Edge> a = L.triangle("z", "a1", "b1");
  append(a, {leaf("a1", "''"), leaf("b1", "''"), L.edge("z", "a4")});
  append(a, L.triangle("w", "a3", "b3"));
  append(a, {leaf("a3", "''"), leaf("b3", "''"), L.edge("w", "a4'")});

  // Side B: T1 = z a2 b2 supported by a2a2'', b2b2'', za3;
  //         U1 = w a4 b4 supported by a4a4'', b4b4'', wb3'.
  std::vector<Edge> b = L.triangle("z", "a2", "b2");
  append(b, {leaf("a2", "''"), leaf("b2", "''"), L.edge("z", "a3")});
  append(b, L.triangle("w", "a4", "b4"));
  append(b, {leaf("a4", "''"), leaf("b4", "''"), L.edge("w", "b3'")});

  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto move = make_move(s, m, a, b);
  return {std::move(move), std::move(a), std::move(b)};
}

std::vector<std::string> strategy_names() {
  return {"path_one_round", "cycle_one_round", "c5_two_round", "fan_h_round", "rho4_three_round"};
}

StrategyScript scripted(const std::string& name) {
  if (name == "path_one_round")
    return {name, "P_n with n >= 6", reject_path, path_move, 1};
  if (name == "cycle_one_round")
    return {name, "C_n with n >= 4", reject_cycle, cycle_move, 1};
  if (name == "c5_two_round")
    return {name, "C5",
            [](const Graph& g) { return reject_unless_isomorphic(g, generate(GadgetSpec::cycle(5)), "C5"); },
            c5_move, 2};
  if (name == "fan_h_round")
    return {name, "the fan gadget H",
            [](const Graph& g) {
              return reject_unless_isomorphic(g, generate(GadgetSpec::fan_h()), "the fan gadget H");
            },
            fan_move, 1};
  if (name == "rho4_three_round")
    return {name, "the rho4 seed (16-cycle with two leaves per cycle vertex)",
            [](const Graph& g) {
              return reject_unless_isomorphic(g, generate(GadgetSpec::rho4_seed()), "the rho4 seed");
            },
            rho4_move, 3};
  std::string known;
  for (const auto& n : strategy_names()) known += (known.empty() ? "" : ", ") + n;
  throw InvalidInput("unknown strategy '" + name + "' (known: " + known + ")");
}

bool holds(const WinPredicate& p, const Graph& g) {
  if (const auto* t = std::get_if<PatternTarget>(&p)) return is_win(g, t->pattern);
  return find_compatible_pair(g, std::get<SupportedPairTarget>(p).r).has_value();
}

std::string describe(const WinPredicate& p) {
  if (const auto* t = std::get_if<PatternTarget>(&p)) {
    if (is_complete(t->pattern)) return "K" + std::to_string(t->pattern.vertex_count());
    return "pattern(n=" + std::to_string(t->pattern.vertex_count()) +
           ",m=" + std::to_string(t->pattern.edge_count()) + ")";
  }
  return "supported-pair:" + std::to_string(std::get<SupportedPairTarget>(p).r);
}

namespace {

std::size_t parse_positive(const std::string& digits, const std::string& whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) {
        return ch >= '0' && ch <= '9';
      }))
    throw InvalidInput("bad target '" + whole + "'");
  return std::stoul(digits);
}

}  // namespace

WinPredicate parse_win_predicate(const std::string& text) {
  const std::string sp = "supported-pair:";
  if (text.rfind(sp, 0) == 0) {
    const auto r = parse_positive(text.substr(sp.size()), text);
    if (r < 3) throw InvalidInput("supported-pair needs r >= 3");
    return SupportedPairTarget{r};
  }
  if (text.size() > 1 && (text[0] == 'K' || text[0] == 'k') &&
      std::all_of(text.begin() + 1, text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const auto k = parse_positive(text.substr(1), text);
    if (k < 1) throw InvalidInput("clique target needs k >= 1");
    return PatternTarget{complete_graph(k)};
  }
  std::ifstream in(text);
  if (!in) throw InvalidInput("target '" + text + "' is neither K<k>, supported-pair:<r> nor a readable file");
  auto g = read_edge_list(in).without_isolated();
  if (g.empty()) throw InvalidInput("target pattern has no edges");
  return PatternTarget{std::move(g)};
}

void explore_branches(const Graph& seed, const StrategyScript& script, const WinPredicate& target,
                      int rounds, const std::function<bool(const Branch&)>& visit) {
  if (rounds < 0) throw InvalidInput("rounds must be >= 0");
  if (rounds > script.declared_rounds)
    throw InvalidInput(script.name + " declares " + std::to_string(script.declared_rounds) +
                       " rounds; asked for " + std::to_string(rounds));
  if (auto why = script.reject_seed(seed))
    throw FamilyMismatch(script.name + " expects " + script.family + ": " + *why);

  // Depth-first over Chooser bits, part A first.
  std::function<bool(const GameState&)> walk = [&](const GameState& s) -> bool {
    if (holds(target, s.graph())) return visit(Branch{s, true, s.round(), {}});
    if (s.round() >= rounds)
      return visit(Branch{s, false, -1,
                          "target " + describe(target) + " absent after " +
                              std::to_string(s.round()) + " rounds"});
    BuilderMove move;
    try {
      move = script.move_fn(s);
    } catch (const std::exception& e) {
      return visit(Branch{s, false, -1, std::string("illegal scripted move: ") + e.what()});
    }
    for (auto choice : {ChooserChoice::kKeepA, ChooserChoice::kKeepB}) {
      std::optional<GameState> next;
      try {
        next = play_round(s, move, choice);
      } catch (const std::exception& e) {
        if (!visit(Branch{s, false, -1, std::string("illegal scripted move: ") + e.what()}))
          return false;
        continue;
      }
      if (!walk(*next)) return false;
    }
    return true;
  };
  walk(GameState(seed));
}

VerificationOutcome verify_strategy(const Graph& seed, const StrategyScript& script,
                                    const WinPredicate& target, int rounds) {
  WinOnAllBranches win;
  std::optional<Counterexample> bad;
  explore_branches(seed, script, target, rounds, [&](const Branch& b) {
    if (!b.won) {
      bad = Counterexample{b.state.transcript(), b.failure};
      return false;
    }
    ++win.leaves;
    win.t_max = std::max(win.t_max, b.won_at);
    return true;
  });
  if (bad) return *bad;
  return win;
}

VerificationOutcome verify_strategy(const Graph& seed, const StrategyScript& script,
                                    const Graph& target, int rounds) {
  return verify_strategy(seed, script, WinPredicate{PatternTarget{target}}, rounds);
}

}  // namespace dpg
