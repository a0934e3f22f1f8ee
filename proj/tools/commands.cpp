#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "cli.hpp"
#include "dpg/criteria.hpp"
#include "dpg/errors.hpp"
#include "dpg/gadgets.hpp"
#include "dpg/graph_io.hpp"
#include "dpg/solver.hpp"
#include "dpg/strategy.hpp"
#include "dpg/transcript.hpp"

namespace dpg::cli {

std::pair<Graph, std::string> load_seed(const SeedSource& src) {
  if (!src.gadget.empty() && !src.seed_file.empty())
    throw InvalidInput("give either --gadget or --seed-file, not both");
  if (!src.seed_file.empty()) {
    std::ifstream in(src.seed_file);
    if (!in) throw InvalidInput("cannot open seed file " + src.seed_file);
    return {read_edge_list(in), src.seed_file};
  }
  if (src.gadget.empty()) throw InvalidInput("no seed: use --gadget <family> or --seed-file <path>");
  auto family = parse_family(src.gadget);
  if (!family)
    throw InvalidInput("unknown gadget family '" + src.gadget +
                       "' (known: path, cycle, fanh, rho4seed, supported-template)");
  if (family_takes_n(*family) && src.n == 0) throw InvalidInput(src.gadget + " needs --n");
  GadgetSpec spec{*family, family_takes_n(*family) ? src.n : 0};
  std::string name = src.gadget;
  if (family_takes_n(*family)) name += "(n=" + std::to_string(src.n) + ")";
  return {generate(spec), name};
}

Record& Record::add(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
  return *this;
}

void Record::print(std::ostream& out) const {
  out << "RESULT";
  for (const auto& [k, v] : fields_) out << '\t' << k << '=' << v;
  out << '\n';
}

namespace {

std::string size_note(const Graph& g) {
  return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
}

Graph pattern_target(const std::string& text) {
  auto p = parse_win_predicate(text);
  if (auto* t = std::get_if<PatternTarget>(&p)) return t->pattern;
  throw InvalidInput("solve needs a subgraph target (K<k> or an edge-list file), not " + text);
}

std::string default_target(const std::string& builder) {
  if (builder == "fan_h_round") return "supported-pair:3";
  if (builder == "rho4_three_round") return "K4";
  return "K3";
}

std::string branch_name(const Transcript& t) {
  std::string s;
  for (const auto& r : t) s += r.choice == ChooserChoice::kKeepA ? 'A' : 'B';
  return s.empty() ? "-" : s;
}

}  // namespace

int cmd_solve(const SolveConfig& c, std::ostream& out) {
  if (c.cap < 0) throw InvalidInput("--cap must be >= 0");
  auto [seed, name] = load_seed(c.seed);
  auto target = pattern_target(c.target);
  SolverOptions opts;
  opts.work_budget = c.budget;
  opts.principal_variation = c.show_pv;
  const auto result = solve(seed, target, c.cap, opts);
  const auto verdict = to_string(result.verdict);
  const auto& st = result.stats;
  if (c.format == Format::kMachine) {
    Record r;
    r.add("command", "solve").add("seed", name).add("target", c.target).add("cap", c.cap);
    r.add("verdict", verdict);
    if (const auto* w = std::get_if<WinsIn>(&result.verdict)) r.add("rounds", w->rounds);
    r.add("positions", static_cast<long long>(st.positions))
        .add("matchings", static_cast<long long>(st.matchings))
        .add("partitions", static_cast<long long>(st.partitions))
        .add("memo_hits", static_cast<long long>(st.memo_hits));
    r.print(out);
    int i = 0;
    for (const auto& round : result.principal_variation)
      Record().add("command", "solve").add("pv_round", ++i).add("move", format_round(round)).print(out);
  } else {
    out << "seed: " << name << " (" << size_note(seed) << ")\n";
    out << "target: " << c.target << "  cap: " << c.cap << '\n';
    out << "verdict: " << verdict << '\n';
    out << "searched: positions=" << st.positions << " matchings=" << st.matchings
        << " partitions=" << st.partitions << " memo_hits=" << st.memo_hits << '\n';
    if (c.show_pv && !result.principal_variation.empty()) {
      out << "principal variation:\n";
      for (const auto& round : result.principal_variation) out << "  " << format_round(round) << '\n';
    }
  }
  return kOk;
}

int cmd_play(const PlayConfig& c, std::ostream& out) {
  auto [seed, name] = load_seed(c.seed);
  const auto script = scripted(c.builder);
  const auto target_text = c.target.empty() ? default_target(c.builder) : c.target;
  const auto target = parse_win_predicate(target_text);
  const int rounds = c.rounds < 0 ? script.declared_rounds : c.rounds;
  if (c.chooser != "exhaustive" && c.chooser != "greedy-avoid" && c.chooser != "random")
    throw InvalidInput("unknown chooser '" + c.chooser + "' (exhaustive, greedy-avoid, random)");

  const bool machine = c.format == Format::kMachine;
  if (!machine) {
    out << "seed: " << name << " (" << size_note(seed) << ")\n";
    out << "builder: " << script.name << "  chooser: " << c.chooser << "  target: " << target_text
        << "  rounds: " << rounds << '\n';
    if (c.chooser == "random") out << "rng: " << c.rng << '\n';
  }

  std::size_t branches = 0, won = 0;
  int latest = 0;
  auto report = [&](const Branch& b) {
    ++branches;
    if (b.won) {
      ++won;
      latest = std::max(latest, b.won_at);
    }
    const auto bits = branch_name(b.state.transcript());
    if (machine) {
      Record r;
      r.add("command", "play").add("branch", bits).add("status", b.won ? "won" : "failed");
      if (b.won) r.add("round", b.won_at);
      else r.add("reason", b.failure);
      r.print(out);
    } else {
      out << "branch " << bits << ": "
          << (b.won ? "won at round " + std::to_string(b.won_at) : "FAILED: " + b.failure) << '\n';
      for (const auto& round : b.state.transcript()) out << "  " << format_round(round) << '\n';
    }
  };

  if (c.chooser == "exhaustive") {
    explore_branches(seed, script, target, rounds, [&](const Branch& b) {
      report(b);
      return true;
    });
  } else {
    if (rounds > script.declared_rounds)
      throw InvalidInput(script.name + " declares " + std::to_string(script.declared_rounds) + " rounds");
    if (auto why = script.reject_seed(seed))
      throw FamilyMismatch(script.name + " expects " + script.family + ": " + *why);
    std::mt19937_64 rng(c.rng);
    std::bernoulli_distribution coin(0.5);
    GameState s(seed);
    std::optional<Branch> leaf;
    while (!leaf) {
      if (holds(target, s.graph())) {
        leaf = Branch{s, true, s.round(), {}};
        break;
      }
      if (s.round() >= rounds) {
        leaf = Branch{s, false, -1, "target " + target_text + " absent after " + std::to_string(s.round()) + " rounds"};
        break;
      }
      try {
        const auto move = script.move_fn(s);
        ChooserChoice choice = ChooserChoice::kKeepA;
        if (c.chooser == "random") {
          choice = coin(rng) ? ChooserChoice::kKeepB : ChooserChoice::kKeepA;
        } else {
          const auto inter = s.grow(move.matching);
          const bool a_hits = holds(target, apply_choice(inter.graph, move, ChooserChoice::kKeepA));
          const bool b_hits = holds(target, apply_choice(inter.graph, move, ChooserChoice::kKeepB));
          if (a_hits && !b_hits) choice = ChooserChoice::kKeepB;
        }
        s = play_round(s, move, choice);
      } catch (const std::exception& e) {
        leaf = Branch{s, false, -1, std::string("illegal scripted move: ") + e.what()};
      }
    }
    report(*leaf);
  }

  const std::string outcome = won == branches ? "WinOnAllBranches(" + std::to_string(latest) + ")" : "Counterexample";
  if (machine) {
    Record().add("command", "play").add("branches", static_cast<long long>(branches))
        .add("won", static_cast<long long>(won)).add("outcome", outcome).print(out);
  } else {
    out << "branches: " << branches << "  won: " << won << "\noutcome: " << outcome << '\n';
  }
  return won == branches ? kOk : kCheckFailed;
}

int cmd_gadget_emit(const EmitConfig& c, std::ostream& out) {
  SeedSource src{c.family, c.n, {}};
  auto [g, name] = load_seed(src);
  if (c.format == "edgelist") write_edge_list(out, g);
  else if (c.format == "dot") write_dot(out, g, c.family);
  else throw InvalidInput("unknown format '" + c.format + "' (edgelist, dot)");
  return kOk;
}

int cmd_bounds(std::size_t k, Format format, std::ostream& out) {
  const auto b = bounds_report(k);
  if (format == Format::kText) {
    out << format_bounds(b);
    return kOk;
  }
  Record r;
  r.add("command", "bounds").add("k", static_cast<long long>(k));
  r.add("rho_lower", static_cast<long long>(b.rho_lower));
  r.add("rho_upper", b.rho_upper_witness ? std::to_string(b.rho_upper_witness->rounds) : "unknown");
  if (b.rho_upper_witness) r.add("rho_upper_witness", b.rho_upper_witness->seed_name + "/" + b.rho_upper_witness->strategy);
  r.add("s_upper", b.s_upper_witness ? std::to_string(b.s_upper_witness->vertex_count) : "unknown");
  r.print(out);
  return kOk;
}

int cmd_replay(const ReplayConfig& c, std::ostream& out) {
  auto [seed, name] = load_seed(c.seed);
  std::ifstream in(c.transcript_file);
  if (!in) throw InvalidInput("cannot open transcript " + c.transcript_file);
  const auto state = replay(seed, parse_transcript(in));
  std::optional<bool> present;
  if (!c.target.empty()) present = holds(parse_win_predicate(c.target), state.graph());
  if (c.format == Format::kMachine) {
    Record r;
    r.add("command", "replay").add("rounds", state.round())
        .add("vertices", static_cast<long long>(state.graph().vertex_count()))
        .add("edges", static_cast<long long>(state.graph().edge_count()));
    if (present) r.add("target", c.target).add("present", *present ? "yes" : "no");
    r.print(out);
  } else {
    out << "replayed " << state.round() << " rounds from " << name << ": "
        << size_note(state.graph()) << '\n';
    if (present) out << "target " << c.target << ": " << (*present ? "present" : "absent") << '\n';
    write_edge_list(out, state.graph());
  }
  return kOk;
}

}  // namespace dpg::cli
