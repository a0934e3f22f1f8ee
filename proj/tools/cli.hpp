#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

enum class Format { kText, kMachine };

struct SeedSource {
  std::string gadget;     // family name, or empty
  std::size_t n = 0;      // for families that take n
  std::string seed_file;  // edge-list path, or empty
};

/// Loads the seed and a short display name; throws InvalidInput.
std::pair<Graph, std::string> load_seed(const SeedSource& src);

/// Tab-separated `key=value` record behind the RESULT prefix.
class Record {
 public:
  Record& add(const std::string& key, const std::string& value);
  Record& add(const std::string& key, long long value) { return add(key, std::to_string(value)); }
  void print(std::ostream& out) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

struct SolveConfig {
  SeedSource seed;
  std::string target = "K3";
  int cap = 3;
  bool show_pv = false;
  std::uint64_t budget = 0;
  Format format = Format::kText;
};
int cmd_solve(const SolveConfig& c, std::ostream& out);

struct PlayConfig {
  SeedSource seed;
  std::string builder;
  std::string chooser = "exhaustive";
  std::string target;  // empty: the strategy's usual target
  int rounds = -1;     // -1: declared rounds
  std::uint64_t rng = 1;
  Format format = Format::kText;
};
int cmd_play(const PlayConfig& c, std::ostream& out);

struct VerifyConfig {
  std::string suite;
  int n_max = -1;  // -1: suite default
  std::uint64_t rng = 1;
  Format format = Format::kText;
};
std::vector<std::string> suite_names();
int cmd_verify(const VerifyConfig& c, std::ostream& out);

struct EmitConfig {
  std::string family;
  std::size_t n = 0;
  std::string format = "edgelist";
};
int cmd_gadget_emit(const EmitConfig& c, std::ostream& out);

int cmd_bounds(std::size_t k, Format format, std::ostream& out);

struct ReplayConfig {
  SeedSource seed;
  std::string transcript_file;
  std::string target;  // optional
  Format format = Format::kText;
};
int cmd_replay(const ReplayConfig& c, std::ostream& out);

}  // namespace dpg::cli
