#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dpg/game.hpp"

namespace dpg {

/// One transcript line as read from text, before validation against a position.
struct RawRound {
  std::vector<Edge> matching;
  std::vector<Edge> part_a;
  std::vector<Edge> part_b;
  ChooserChoice choice = ChooserChoice::kKeepA;
};

/// `M: u1-v1,u2-v2 | A: e,e,... | B: e,e,... | c: 0|1`, vertices by numeric id.
std::string format_round(const RoundRecord& r);
std::string format_transcript(const Transcript& t);

/// Throws ParseError carrying `line_number`.
RawRound parse_round(const std::string& line, std::size_t line_number = 1);
/// Skips blank lines and `#` comments.
std::vector<RawRound> parse_transcript(std::istream& in);

/// Replays parsed rounds from `seed`, validating each against the position reached.
GameState replay(const Graph& seed, const std::vector<RawRound>& rounds);

}  // namespace dpg
