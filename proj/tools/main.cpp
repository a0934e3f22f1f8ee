#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"
#include "dpg/errors.hpp"

using namespace dpg::cli;

namespace {

void add_seed_options(CLI::App* cmd, SeedSource& seed) {
  cmd->add_option("--gadget", seed.gadget, "Seed family: path, cycle, fanh, rho4seed, supported-template");
  cmd->add_option("--n", seed.n, "Family size parameter");
  cmd->add_option("--seed-file", seed.seed_file, "Seed edge-list file");
}

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format: text or machine")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText}, {"machine", Format::kMachine}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine and verifier for the degree-preserving Builder-Chooser clique game", "dpg"};
  app.require_subcommand(1);

  SolveConfig solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact forcing time of a target from a seed, up to a cap");
  add_seed_options(solve_cmd, solve.seed);
  solve_cmd->add_option("--target", solve.target, "K<k> or a pattern edge-list file")->capture_default_str();
  solve_cmd->add_option("--cap", solve.cap, "Largest round count searched")->capture_default_str();
  solve_cmd->add_flag("--pv", solve.show_pv, "Print the principal variation");
  solve_cmd->add_option("--budget", solve.budget, "Work budget (0 = unlimited)");
  add_format_option(solve_cmd, solve.format);

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a registered verification suite");
  verify_cmd->add_option("suite", verify.suite, "Suite name, or 'all'")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest instance size for size-indexed suites");
  verify_cmd->add_option("--rng", verify.rng, "Seed for randomized suites")->capture_default_str();
  add_format_option(verify_cmd, verify.format);

  PlayConfig play;
  auto* play_cmd = app.add_subcommand("play", "Play a scripted Builder against a Chooser policy");
  add_seed_options(play_cmd, play.seed);
  play_cmd->add_option("--builder", play.builder, "Strategy name")->required();
  play_cmd->add_option("--chooser", play.chooser, "exhaustive, greedy-avoid or random")->capture_default_str();
  play_cmd->add_option("--target", play.target, "K<k>, supported-pair:<r> or a pattern file");
  play_cmd->add_option("--rounds", play.rounds, "Rounds to play (default: the strategy's own)");
  play_cmd->add_option("--rng", play.rng, "Seed for the random chooser")->capture_default_str();
  add_format_option(play_cmd, play.format);

  EmitConfig emit;
  auto* gadget_cmd = app.add_subcommand("gadget", "Gadget generators");
  gadget_cmd->require_subcommand(1);
  auto* emit_cmd = gadget_cmd->add_subcommand("emit", "Write a generated gadget");
  emit_cmd->add_option("family", emit.family, "Family name")->required();
  emit_cmd->add_option("--n", emit.n, "Family size parameter");
  emit_cmd->add_option("--format", emit.format, "edgelist or dot")->capture_default_str();

  std::size_t k = 4;
  Format bounds_format = Format::kText;
  auto* bounds_cmd = app.add_subcommand("bounds", "Known bounds on forcing K_k from triangle-free seeds");
  bounds_cmd->add_option("--k", k, "Clique order (>= 3)")->capture_default_str();
  add_format_option(bounds_cmd, bounds_format);

  ReplayConfig replay;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a transcript from a seed");
  add_seed_options(replay_cmd, replay.seed);
  replay_cmd->add_option("--transcript", replay.transcript_file, "Transcript file")->required();
  replay_cmd->add_option("--target", replay.target, "Report whether this target is present");
  add_format_option(replay_cmd, replay.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, std::cout);
    if (*verify_cmd) return cmd_verify(verify, std::cout);
    if (*play_cmd) return cmd_play(play, std::cout);
    if (*emit_cmd) return cmd_gadget_emit(emit, std::cout);
    if (*bounds_cmd) return cmd_bounds(k, bounds_format, std::cout);
    if (*replay_cmd) return cmd_replay(replay, std::cout);
  } catch (const dpg::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const dpg::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const dpg::NotApplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
