#include "dpg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dpg/cliques.hpp"
#include "dpg/copies.hpp"
#include "dpg/errors.hpp"

namespace dpg {

ChooserChoice choice_from_bit(int b) {
  if (b == 0) return ChooserChoice::kKeepA;
  if (b == 1) return ChooserChoice::kKeepB;
  throw InvalidInput("chooser bit must be 0 or 1, got " + std::to_string(b));
}

Intermediate dpg_step(const Graph& g, const Matching& m, int round) {
  for (const auto& e : m.edges())
    if (!g.has_edge(e))
      throw InvalidInput("matching edge " + g.display_name(e.u) + "-" + g.display_name(e.v) +
                         " is not an edge of the current graph");
  if (!is_matching(m.edges())) throw InvalidInput("edges do not form a matching");
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() + m.size());
  for (const auto& e : g.edges())
    if (!std::binary_search(m.edges().begin(), m.edges().end(), e)) kept.push_back(e);
  const auto w = g.next_vertex_id();
  for (auto z : endpoints_of(m)) kept.push_back(Edge::of(w, z));
  std::vector<VertexInfo> vs(g.vertices().begin(), g.vertices().end());
  vs.push_back({w, Provenance::created_at(round), {}});
  return {Graph(std::move(vs), std::move(kept)), w};
}

void validate_bipartition(const Graph& intermediate, const BuilderMove& move) {
  std::vector<Edge> all;
  all.insert(all.end(), move.part_a.begin(), move.part_a.end());
  all.insert(all.end(), move.part_b.begin(), move.part_b.end());
  std::sort(all.begin(), all.end());
  std::vector<Edge> duplicated, foreign, missing;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0 && all[i] == all[i - 1]) {
      if (duplicated.empty() || duplicated.back() != all[i]) duplicated.push_back(all[i]);
      continue;
    }
    if (!intermediate.has_edge(all[i])) foreign.push_back(all[i]);
  }
  for (const auto& e : intermediate.edges())
    if (!std::binary_search(all.begin(), all.end(), e)) missing.push_back(e);
  if (duplicated.empty() && foreign.empty() && missing.empty()) return;
  auto list = [](const std::vector<Edge>& es) {
    std::string s;
    for (const auto& e : es) {
      if (!s.empty()) s += ",";
      s += std::to_string(e.u.value) + "-" + std::to_string(e.v.value);
    }
    return s;
  };
  std::string msg = "not a bipartition of the intermediate edge set:";
  if (!missing.empty()) msg += " missing {" + list(missing) + "}";
  if (!duplicated.empty()) msg += " duplicated {" + list(duplicated) + "}";
  if (!foreign.empty()) msg += " not in graph {" + list(foreign) + "}";
  throw InvalidInput(msg);
}

Graph apply_choice(const Graph& intermediate, const BuilderMove& move, ChooserChoice c) {
  validate_bipartition(intermediate, move);
  return intermediate.with_edges(c == ChooserChoice::kKeepA ? move.part_a : move.part_b);
}

BuilderMove assemble_move(const Graph& intermediate, Matching m, std::vector<Edge> bundle_a,
                          std::vector<Edge> bundle_b) {
  auto normalize = [&](std::vector<Edge>& es) {
    for (auto& e : es) {
      e = Edge::of(e.u, e.v);
      if (!intermediate.has_edge(e))
        throw InvalidInput("bundle edge " + intermediate.display_name(e.u) + "-" +
                           intermediate.display_name(e.v) + " is not an intermediate edge");
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
  };
  normalize(bundle_a);
  normalize(bundle_b);
  std::vector<Edge> overlap;
  std::set_intersection(bundle_a.begin(), bundle_a.end(), bundle_b.begin(), bundle_b.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) throw InvalidInput("bundles for the two parts share an edge");
  BuilderMove move{std::move(m), {}, std::move(bundle_b)};
  for (const auto& e : intermediate.edges())
    if (!std::binary_search(move.part_b.begin(), move.part_b.end(), e)) move.part_a.push_back(e);
  return move;
}

GameState::GameState(Graph seed)
    : graph_(std::move(seed)), seed_omega_(clique_number(graph_)) {}

GameState play_round(const GameState& s, const BuilderMove& move, ChooserChoice c) {
  const auto inter = s.grow(move.matching);
  GameState next;
  next.graph_ = apply_choice(inter.graph, move, c);
  next.round_ = s.round_ + 1;
  next.transcript_ = s.transcript_;
  next.transcript_.push_back({move, c});
  next.seed_omega_ = s.seed_omega_;

  std::vector<int> created(static_cast<std::size_t>(next.round_) + 1, 0);
  for (const auto& v : next.graph_.vertices()) {
    if (auto r = v.provenance.round()) {
      if (*r > next.round_) throw std::logic_error("vertex created in a future round");
      ++created[static_cast<std::size_t>(*r)];
    }
  }
  for (int t = 1; t <= next.round_; ++t)
    if (created[static_cast<std::size_t>(t)] != 1)
      throw std::logic_error("round " + std::to_string(t) + " must create exactly one vertex");
  if (clique_number(next.graph_) > next.seed_omega_ + static_cast<std::size_t>(next.round_))
    throw std::logic_error("clique number grew by more than one per round");
  return next;
}

bool is_win(const Graph& g, const Graph& target) {
  if (is_complete(target)) return contains_clique(g, target.vertex_count());
  return contains_copy(g, target);
}

bool is_win(const GameState& s, const Graph& target) { return is_win(s.graph(), target); }

}  // namespace dpg
