#include <doctest.h>

#include <sstream>

#include "dpg/cliques.hpp"
#include "dpg/errors.hpp"
#include "dpg/gadgets.hpp"
#include "dpg/game.hpp"
#include "dpg/transcript.hpp"
#include "helpers.hpp"

using namespace dpg;
using namespace testing_helpers;

namespace {

BuilderMove split_by(const Intermediate& inter, const Matching& m,
                     const std::function<bool(const Edge&)>& to_b) {
  std::vector<Edge> a, b;
  for (const auto& e : inter.graph.edges()) (to_b(e) ? b : a).push_back(e);
  return {m, a, b};
}

}  // namespace

TEST_CASE("growth step preserves old degrees and gives the new vertex 2|M|") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(rng, 3 + static_cast<std::size_t>(i % 6), 0.5);
    const auto ms = enumerate_matchings(g, 0, g.vertex_count());
    const auto& m = ms[static_cast<std::size_t>(i) % ms.size()];
    const auto inter = dpg_step(g, m, 1);
    CHECK(inter.new_vertex == g.next_vertex_id());
    CHECK(inter.graph.vertex_count() == g.vertex_count() + 1);
    CHECK(inter.graph.edge_count() == g.edge_count() + m.size());
    CHECK(inter.graph.degree(inter.new_vertex) == 2 * m.size());
    CHECK(inter.graph.info(inter.new_vertex).provenance.round() == 1);
    for (auto v : g.vertex_ids()) CHECK(inter.graph.degree(v) == g.degree(v));
    for (const auto& e : m.edges()) CHECK_FALSE(inter.graph.has_edge(e));
  }
}

TEST_CASE("empty matching leaves the graph unchanged up to one isolated vertex") {
  const auto g = generate(GadgetSpec::cycle(5));
  GameState s(g);
  const auto inter = s.grow(Matching{});
  CHECK(inter.graph.without_isolated() == g);
  const auto move = split_by(inter, Matching{}, [](const Edge& e) { return e.u.value == 0; });
  const auto kept = apply_choice(inter.graph, move, ChooserChoice::kKeepA);
  CHECK(kept.vertex_count() == 6);
}

TEST_CASE("bipartition validation names the problem edges") {
  const auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto m = Matching::of(g, {Edge::of(0, 1)});
  const auto inter = dpg_step(g, m, 1);
  BuilderMove move{m, {Edge::of(1, 2), Edge::of(0, 4)}, {Edge::of(1, 2), Edge::of(0, 3)}};
  try {
    validate_bipartition(inter.graph, move);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    CHECK(msg.find("missing {1-4,2-3}") != std::string::npos);
    CHECK(msg.find("duplicated {1-2}") != std::string::npos);
    CHECK(msg.find("not in graph {0-3}") != std::string::npos);
  }
  CHECK_THROWS_AS(apply_choice(inter.graph, move, ChooserChoice::kKeepA), InvalidInput);
  CHECK_THROWS_AS(choice_from_bit(2), InvalidInput);
  CHECK(choice_from_bit(1) == ChooserChoice::kKeepB);
}

TEST_CASE("assemble_move puts leftovers on side A and rejects overlaps") {
  const auto g = generate(GadgetSpec::cycle(4));
  const auto m = Matching::of(g, {Edge::of(0, 1), Edge::of(2, 3)});
  const auto inter = dpg_step(g, m, 1);
  const auto mv = assemble_move(inter.graph, m, {Edge::of(1, 2)}, {Edge::of(0, 3)});
  CHECK(mv.part_b == std::vector<Edge>{Edge::of(0, 3)});
  CHECK(mv.part_a.size() == inter.graph.edge_count() - 1);
  CHECK_THROWS_AS(assemble_move(inter.graph, m, {Edge::of(1, 2)}, {Edge::of(1, 2)}), InvalidInput);
  CHECK_THROWS_AS(assemble_move(inter.graph, m, {Edge::of(0, 2)}, {}), InvalidInput);
}

TEST_CASE("play_round records the transcript and wins are judged on the kept graph") {
  const auto c4 = generate(GadgetSpec::cycle(4));
  GameState s(c4);
  CHECK(s.seed_clique_number() == 2);
  const auto m = Matching::of(c4, {Edge::of(0, 1), Edge::of(2, 3)});
  const auto inter = s.grow(m);
  const auto w = inter.new_vertex;
  // Triangle w v2 v3 on A, w v4 v1 on B.
  const auto move = assemble_move(inter.graph, m, {Edge::of(VertexId{1}, w), Edge::of(VertexId{2}, w), Edge::of(1, 2)},
                                  {Edge::of(VertexId{0}, w), Edge::of(VertexId{3}, w), Edge::of(0, 3)});
  CHECK_FALSE(is_win(s, complete_graph(3)));
  for (auto c : {ChooserChoice::kKeepA, ChooserChoice::kKeepB}) {
    const auto next = play_round(s, move, c);
    CHECK(next.round() == 1);
    REQUIRE(next.transcript().size() == 1);
    CHECK(next.transcript()[0].choice == c);
    CHECK(next.transcript()[0].move == move);
    CHECK(is_win(next, complete_graph(3)));
    CHECK(next.graph().vertex_count() == 5);
  }
  CHECK(s.round() == 0);  // states are values
}

TEST_CASE("random plays keep provenance and clique growth invariants") {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 150; ++i) {
    GameState s(random_graph(rng, 4 + static_cast<std::size_t>(i % 5), 0.5));
    const auto omega0 = clique_number(s.graph());
    for (int r = 1; r <= 3; ++r) {
      const auto ms = enumerate_matchings(s.graph(), 1, s.graph().vertex_count());
      if (ms.empty()) break;
      const auto& m = ms[rng() % ms.size()];
      const auto inter = s.grow(m);
      const auto move = split_by(inter, m, [&](const Edge&) { return coin(rng); });
      s = play_round(s, move, coin(rng) ? ChooserChoice::kKeepB : ChooserChoice::kKeepA);
      CHECK(clique_number(s.graph()) <= omega0 + static_cast<std::size_t>(r));
      std::size_t created = 0;
      for (const auto& v : s.graph().vertices())
        if (!v.provenance.is_seed()) ++created;
      CHECK(created == static_cast<std::size_t>(r));
    }
  }
}

TEST_CASE("transcript text round-trips and replays bit-exactly") {
  const auto seed = generate(GadgetSpec::cycle(5));
  GameState s(seed);
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r < 3; ++r) {
    const auto ms = enumerate_matchings(s.graph(), 1, 3);
    const auto& m = ms[rng() % ms.size()];
    const auto inter = s.grow(m);
    s = play_round(s, split_by(inter, m, [&](const Edge&) { return coin(rng); }),
                   coin(rng) ? ChooserChoice::kKeepB : ChooserChoice::kKeepA);
  }
  const auto text = format_transcript(s.transcript());
  std::istringstream in("# header\n\n" + text);
  const auto raw = parse_transcript(in);
  REQUIRE(raw.size() == 3);
  const auto again = replay(seed, raw);
  CHECK(again.graph() == s.graph());
  CHECK(again.transcript() == s.transcript());
  CHECK(format_transcript(again.transcript()) == text);
}

TEST_CASE("transcript parse errors") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_transcript(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("M: 0-1 | A: 0-5 | B: 1-5 | c: 0\nM: 0-1 | A: | B: | c: 2\n") == 2);
  CHECK(line_of("\n# x\nM: 0-0 | A: | B: | c: 0\n") == 3);
  CHECK(line_of("M: 0-1 | A: 0-5\n") == 1);
  CHECK(line_of("M: 0-1 | A: 0-5 | B: 1-5 | c: 1\n") == 0);
  // Well-formed text that is not a legal move fails at replay time.
  std::istringstream bad("M: 0-2 | A: | B: | c: 0\n");
  CHECK_THROWS_AS(replay(generate(GadgetSpec::cycle(5)), parse_transcript(bad)), InvalidInput);
}
