#include "dpg/transcript.hpp"

#include <istream>
#include <sstream>

#include "dpg/errors.hpp"

namespace dpg {

namespace {

std::string format_edges(std::span<const Edge> es) {
  std::string s;
  for (const auto& e : es) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.u.value) + "-" + std::to_string(e.v.value);
  }
  return s;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_id(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "bad vertex id '" + s + "'");
  try {
    const auto v = std::stoull(s);
    if (v > 0xffffffffULL) throw ParseError(line, "vertex id too large '" + s + "'");
    return static_cast<std::uint32_t>(v);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "vertex id too large '" + s + "'");
  }
}

std::vector<Edge> parse_edges(const std::string& field, std::size_t line) {
  std::vector<Edge> out;
  const auto body = strip(field);
  if (body.empty()) return out;
  std::istringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError(line, "bad edge '" + item + "'");
    const auto u = parse_id(strip(item.substr(0, dash)), line);
    const auto v = parse_id(strip(item.substr(dash + 1)), line);
    if (u == v) throw ParseError(line, "self-loop in edge '" + item + "'");
    out.push_back(Edge::of(u, v));
  }
  return out;
}

}  // namespace

std::string format_round(const RoundRecord& r) {
  return "M: " + format_edges(r.move.matching.edges()) + " | A: " + format_edges(r.move.part_a) +
         " | B: " + format_edges(r.move.part_b) + " | c: " + std::to_string(bit(r.choice));
}

std::string format_transcript(const Transcript& t) {
  std::string out;
  for (const auto& r : t) out += format_round(r) + "\n";
  return out;
}

RawRound parse_round(const std::string& line, std::size_t line_number) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (std::getline(ss, f, '|')) fields.push_back(strip(f));
  if (fields.size() != 4)
    throw ParseError(line_number, "expected 4 '|'-separated fields, found " +
                                      std::to_string(fields.size()));
  const char* tags[] = {"M:", "A:", "B:", "c:"};
  for (std::size_t i = 0; i < 4; ++i)
    if (fields[i].rfind(tags[i], 0) != 0)
      throw ParseError(line_number, std::string("field ") + std::to_string(i + 1) +
                                        " must start with '" + tags[i] + "'");
  RawRound r;
  r.matching = parse_edges(fields[0].substr(2), line_number);
  r.part_a = parse_edges(fields[1].substr(2), line_number);
  r.part_b = parse_edges(fields[2].substr(2), line_number);
  const auto c = strip(fields[3].substr(2));
  if (c != "0" && c != "1") throw ParseError(line_number, "chooser bit must be 0 or 1");
  r.choice = choice_from_bit(c == "1" ? 1 : 0);
  return r;
}

std::vector<RawRound> parse_transcript(std::istream& in) {
  std::vector<RawRound> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    out.push_back(parse_round(s, n));
  }
  return out;
}

GameState replay(const Graph& seed, const std::vector<RawRound>& rounds) {
  GameState state(seed);
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const auto& r = rounds[i];
    try {
      BuilderMove move{Matching::of(state.graph(), r.matching), r.part_a, r.part_b};
      std::sort(move.part_a.begin(), move.part_a.end());
      std::sort(move.part_b.begin(), move.part_b.end());
      state = play_round(state, move, r.choice);
    } catch (const InvalidInput& e) {
      throw InvalidInput("round " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return state;
}

}  // namespace dpg
