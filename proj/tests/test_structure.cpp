// Matchings, cliques, copies and canonical forms against the brute-force oracles.
#include <doctest.h>

#include <map>
#include <set>

#include "dpg/canonical.hpp"
#include "dpg/census.hpp"
#include "dpg/cliques.hpp"
#include "dpg/copies.hpp"
#include "dpg/errors.hpp"
#include "dpg/gadgets.hpp"
#include "dpg/matching.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dpg;
using namespace testing_helpers;

TEST_CASE("matchings of C5") {
  const auto c5 = generate(GadgetSpec::cycle(5));
  CHECK(enumerate_matchings(c5, 1, 5).size() == 10);
  CHECK(enumerate_matchings(c5, 1, 1).size() == 5);
  CHECK(enumerate_matchings(c5, 2, 2).size() == 5);
  const auto only_empty = enumerate_matchings(c5, 0, 0);
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty.front().empty());
  CHECK(oracle::matchings(oracle::from(c5)).size() == 11);
}

TEST_CASE("matching enumeration order and early stop") {
  const auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto all = enumerate_matchings(g, 0, 2);
  REQUIRE(all.size() == 7);
  CHECK(all[0].empty());
  for (std::size_t i = 1; i < all.size(); ++i) {
    std::vector<Edge> a(all[i - 1].edges().begin(), all[i - 1].edges().end());
    std::vector<Edge> b(all[i].edges().begin(), all[i].edges().end());
    CHECK(a < b);
  }
  int seen = 0;
  const bool finished = for_each_matching(g, 0, 2, [&](const Matching&) { return ++seen < 3; });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("Matching::of and cross_graph validate") {
  const auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(Matching::of(g, {Edge::of(0, 1), Edge::of(1, 2)}), InvalidInput);
  CHECK_THROWS_AS(Matching::of(g, {Edge::of(0, 2)}), InvalidInput);
  const auto m = Matching::of(g, {Edge::of(2, 3), Edge::of(0, 1)});
  CHECK(endpoints_of(m).size() == 4);
  const auto x = cross_graph(g, m);
  CHECK(x.vertex_count() == 4);
  CHECK(x.edge_count() == 1);
  CHECK(x.has_edge(VertexId{1}, VertexId{2}));
}

TEST_CASE("matching counts, matching number and cross graphs agree with the oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : graphs_up_to_isomorphism(n)) {
      const auto o = oracle::from(g);
      const auto all = oracle::matchings(o);
      CHECK(enumerate_matchings(g, 0, n).size() == all.size());
      CHECK(matching_number(g) == static_cast<std::size_t>(oracle::matching_number(o)));
      CHECK(clique_packing_number(g, 2) == matching_number(g));
      for (const auto& pick : all) {
        std::vector<Edge> es;
        for (int i : pick) es.push_back(g.edges()[static_cast<std::size_t>(i)]);
        const auto x = cross_graph(g, Matching::of(g, es));
        CHECK(oracle::isomorphic(oracle::from(x), oracle::cross(o, pick)));
      }
    }
  }
}

TEST_CASE("clique numbers, clique counts and packings agree with the oracle") {
  std::mt19937_64 rng(11);
  std::vector<Graph> sample = graphs_up_to_isomorphism_through(6);
  for (int i = 0; i < 60; ++i) sample.push_back(random_graph(rng, 7 + static_cast<std::size_t>(i % 4), 0.55));
  for (const auto& g : sample) {
    const auto o = oracle::from(g);
    CHECK(clique_number(g) == static_cast<std::size_t>(oracle::clique_number(o)));
    for (int k = 2; k <= 4; ++k) {
      CHECK(cliques_of_size(g, static_cast<std::size_t>(k)).size() ==
            static_cast<std::size_t>(oracle::count_cliques(o, k)));
      CHECK(contains_clique(g, static_cast<std::size_t>(k)) == oracle::has_clique(o, k));
    }
    for (int r = 3; r <= 4; ++r)
      CHECK(clique_packing_number(g, static_cast<std::size_t>(r)) ==
            static_cast<std::size_t>(oracle::clique_packing(o, r)));
  }
  CHECK_THROWS_AS(clique_packing_number(complete_graph(3), 1), InvalidInput);
}

TEST_CASE("maximal cliques of a small graph") {
  const auto g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  std::set<std::vector<VertexId>> found;
  for_each_maximal_clique(g, [&](std::span<const VertexId> c) { found.emplace(c.begin(), c.end()); });
  CHECK(found.size() == 3);
  CHECK(found.count({VertexId{0}, VertexId{1}, VertexId{2}}) == 1);
  CHECK(clique_number(Graph::from_edges(0, {})) == 0);
}

TEST_CASE("pattern copies") {
  const auto k4 = complete_graph(4);
  const auto k3 = complete_graph(3);
  CHECK(find_copies(k4, k3).size() == 4);
  CHECK(find_copies(k4, k3, 2).size() == 2);
  const auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(find_copies(complete_graph(3), p3).size() == 3);
  CHECK_FALSE(two_edge_disjoint_copies(k4, k3).has_value());
  const auto bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const auto pair = two_edge_disjoint_copies(bowtie, k3);
  REQUIRE(pair.has_value());
  for (const auto& e : pair->first.edges)
    CHECK(std::find(pair->second.edges.begin(), pair->second.edges.end(), e) == pair->second.edges.end());
}

TEST_CASE("contains_copy agrees with the oracle for non-clique patterns") {
  const std::vector<Graph> patterns{
      Graph::from_edges(3, {{0, 1}, {1, 2}}),
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
      Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}),
      Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
  };
  for (const auto& g : graphs_up_to_isomorphism_through(6)) {
    const auto o = oracle::from(g);
    for (const auto& p : patterns) CHECK(contains_copy(g, p) == oracle::has_copy(o, oracle::from(p)));
  }
}

TEST_CASE("find_isomorphism returns a valid map") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto g = random_graph(rng, 9, 0.4);
    const auto h = relabel(g, random_perm(rng, 9));
    const auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    for (const auto& e : g.edges())
      CHECK(h.has_edge((*iso)[g.index_of(e.u)], (*iso)[g.index_of(e.v)]));
  }
  CHECK_FALSE(find_isomorphism(generate(GadgetSpec::cycle(6)),
                               Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}))
                  .has_value());
}

TEST_CASE("canonical form is an exact isomorphism invariant on all graphs up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<std::string, CanonicalKey> by_oracle;
    std::map<CanonicalKey, std::string> by_library;
    for (const auto& g : all_labeled(n)) {
      const auto mine = canonical_form(g);
      const auto ref = oracle::canonical(oracle::from(g));
      auto [it, fresh] = by_oracle.emplace(ref, mine);
      if (!fresh) CHECK(it->second == mine);
      auto [jt, fresh2] = by_library.emplace(mine, ref);
      if (!fresh2) CHECK(jt->second == ref);
    }
  }
}

TEST_CASE("canonical form on 7-vertex samples and larger relabelings") {
  std::mt19937_64 rng(2024);
  std::map<std::string, CanonicalKey> seen;
  for (int i = 0; i < 400; ++i) {
    const auto g = random_graph(rng, 7, 0.45);
    const auto key = canonical_form(g);
    auto [it, fresh] = seen.emplace(oracle::canonical(oracle::from(g)), key);
    if (!fresh) CHECK(it->second == key);
    CHECK(canonical_form(relabel(g, random_perm(rng, 7))) == key);
  }
  for (const auto& spec : {GadgetSpec::fan_h(), GadgetSpec::rho4_seed(), GadgetSpec::cycle(20)}) {
    const auto g = generate(spec);
    CHECK(canonical_form(relabel(g, random_perm(rng, g.vertex_count()))) == canonical_form(g));
  }
  // Strongly regular pair with identical degree sequences: 4x4 rook graph vs Shrikhande.
  auto rook = [] {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t a = 0; a < 16; ++a)
      for (std::uint32_t b = a + 1; b < 16; ++b)
        if (a / 4 == b / 4 || a % 4 == b % 4) es.emplace_back(a, b);
    return Graph::from_edges(16, es);
  }();
  auto shrikhande = [] {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    auto id = [](int x, int y) { return static_cast<std::uint32_t>(((x + 4) % 4) * 4 + (y + 4) % 4); };
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
          const auto a = id(x, y), b = id(x + dx, y + dy);
          es.emplace_back(std::min(a, b), std::max(a, b));
        }
    return Graph::from_edges(16, es);
  }();
  CHECK(rook.edge_count() == 48);
  CHECK(shrikhande.edge_count() == 48);
  CHECK_FALSE(canonical_form(rook) == canonical_form(shrikhande));
  CHECK(canonical_form(relabel(shrikhande, random_perm(rng, 16))) == canonical_form(shrikhande));
}

TEST_CASE("canonical form ignores isolated vertices") {
  const auto a = Graph::from_edges(3, {{0, 1}});
  const auto b = Graph::from_edges(6, {{4, 2}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(isomorphic_ignoring_isolated(a, b));
  CHECK(std::hash<CanonicalKey>{}(canonical_form(a)) == std::hash<CanonicalKey>{}(canonical_form(b)));
}

TEST_CASE("census counts match known enumerations") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> triangle_free{1, 2, 3, 7, 14, 38, 107};
  const std::vector<std::size_t> connected_tf{1, 1, 1, 3, 6, 19, 59};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(graphs_up_to_isomorphism(n).size() == all[n - 1]);
    CHECK(graphs_up_to_isomorphism(n, {true, false}).size() == triangle_free[n - 1]);
    CHECK(graphs_up_to_isomorphism(n, {true, true}).size() == connected_tf[n - 1]);
  }
  for (const auto& g : graphs_up_to_isomorphism(6, {true, true, 7})) {
    const auto o = oracle::from(g);
    CHECK(oracle::connected(o));
    CHECK_FALSE(oracle::has_clique(o, 3));
    CHECK(g.edge_count() <= 7);
  }
  CHECK(graphs_up_to_isomorphism(0).empty());
}
