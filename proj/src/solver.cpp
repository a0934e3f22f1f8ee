#include "dpg/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "dpg/canonical.hpp"
#include "dpg/copies.hpp"
#include "dpg/errors.hpp"

namespace dpg {

std::string to_string(const Verdict& v) {
  if (const auto* w = std::get_if<WinsIn>(&v)) return "WinsIn(" + std::to_string(w->rounds) + ")";
  return "SurvivesCap(" + std::to_string(std::get<SurvivesCap>(v).cap) + ")";
}

namespace {

constexpr int kMaxVertices = 64;
using Mask = std::uint64_t;
using IndexEdge = std::pair<int, int>;
using EdgeList = std::vector<IndexEdge>;

constexpr Mask bit_of(int i) { return Mask{1} << i; }

// Dense position: vertex i of the packed graph is vertex i (in id order) of
// the corresponding Graph, and a growth step appends vertex n.
struct Packed {
  int n = 0;
  std::array<Mask, kMaxVertices> adj{};

  void add(int a, int b) {
    adj[a] |= bit_of(b);
    adj[b] |= bit_of(a);
  }
  void remove(int a, int b) {
    adj[a] &= ~bit_of(b);
    adj[b] &= ~bit_of(a);
  }
};

EdgeList edges_of(const Packed& p) {
  EdgeList out;
  for (int u = 0; u < p.n; ++u) {
    Mask higher = p.adj[u] & ~((bit_of(u) << 1) - 1);
    while (higher) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Packed pack(const Graph& g, int headroom) {
  if (static_cast<int>(g.vertex_count()) + headroom > kMaxVertices)
    throw BudgetExceeded("solver positions are limited to " + std::to_string(kMaxVertices) +
                         " vertices (seed has " + std::to_string(g.vertex_count()) +
                         ", cap adds " + std::to_string(headroom) + ")");
  Packed p;
  p.n = static_cast<int>(g.vertex_count());
  for (const auto& e : g.edges())
    p.add(static_cast<int>(g.index_of(e.u)), static_cast<int>(g.index_of(e.v)));
  return p;
}

Graph unpack(const Packed& p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  for (auto [u, v] : edges_of(p))
    es.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  return Graph::from_edges(static_cast<std::size_t>(p.n), es);
}

Packed grow(const Packed& p, const EdgeList& matching) {
  if (p.n >= kMaxVertices) throw BudgetExceeded("solver position exceeds 64 vertices");
  Packed q = p;
  const int w = q.n++;
  for (auto [a, b] : matching) {
    q.remove(a, b);
    q.add(w, a);
    q.add(w, b);
  }
  return q;
}

std::string canonical_key(const Packed& p) {
  std::array<int, kMaxVertices> slot{};
  int m = 0;
  for (int v = 0; v < p.n; ++v) slot[v] = p.adj[v] ? m++ : -1;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < p.n; ++v) {
    if (slot[v] < 0) continue;
    Mask nb = p.adj[v];
    Mask row = 0;
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      row |= bit_of(slot[u]);
    }
    rows[static_cast<std::size_t>(slot[v])] = row;
  }
  return detail::canonical_certificate(static_cast<std::size_t>(m), rows, 1);
}

bool has_clique(const Packed& p, Mask cand, int need) {
  if (need == 0) return true;
  if (std::popcount(cand) < need) return false;
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_clique(p, cand & p.adj[v], need - 1)) return true;
  }
  return false;
}

void collect_cliques(const Packed& p, Mask chosen, Mask cand, int need, std::vector<Mask>& out) {
  if (need == 0) {
    out.push_back(chosen);
    return;
  }
  while (cand) {
    if (std::popcount(cand) < need) return;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    collect_cliques(p, chosen | bit_of(v), cand & p.adj[v], need - 1, out);
  }
}

EdgeList clique_edge_list(Mask m) {
  EdgeList out;
  for (Mask a = m; a; a &= a - 1)
    for (Mask b = a & (a - 1); b; b &= b - 1)
      out.emplace_back(std::countr_zero(a), std::countr_zero(b));
  return out;
}

// Visits nonempty matchings of p in lexicographic order of sorted edge lists.
bool walk_matchings(const EdgeList& edges, std::size_t from, Mask used, EdgeList& current,
                    const std::function<bool(const EdgeList&)>& visit) {
  for (std::size_t i = from; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (used & (bit_of(a) | bit_of(b))) continue;
    current.push_back(edges[i]);
    const bool go_on = visit(current) &&
                       walk_matchings(edges, i + 1, used | bit_of(a) | bit_of(b), current, visit);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}

void for_each_nonempty_matching(const Packed& p, const std::function<bool(const EdgeList&)>& visit) {
  const auto edges = edges_of(p);
  EdgeList current;
  walk_matchings(edges, 0, 0, current, visit);
}

struct MemoEntry {
  int win_within = INT_MAX;  // smallest depth proven winning
  int loss_upto = -1;        // largest depth proven not winning
};

// One enumerated Builder move in packed form.
struct PackedMove {
  EdgeList matching;
  EdgeList part_a;
  EdgeList part_b;
  Packed kept_a;
  Packed kept_b;
};

}  // namespace

struct Solver::Impl {
  Graph target;
  SolverOptions options;
  bool clique_target;
  int k;
  std::unordered_map<std::string, MemoEntry> memo;
  SolveStats stats;

  Impl(Graph t, SolverOptions o)
      : target(std::move(t)),
        options(o),
        clique_target(is_complete(target)),
        k(static_cast<int>(target.vertex_count())) {
    if (target.empty()) throw InvalidInput("target graph is empty");
    if (!clique_target && !is_connected(target))
      throw InvalidInput("non-clique targets must be connected");
  }

  void charge(std::uint64_t SolveStats::*counter) {
    ++(stats.*counter);
    if (options.work_budget == 0) return;
    const auto work = stats.positions + stats.matchings + stats.partitions;
    if (work > options.work_budget)
      throw BudgetExceeded("solver work budget of " + std::to_string(options.work_budget) +
                           " exceeded");
  }

  bool contains_target(const Packed& p) const {
    if (clique_target) {
      Mask all = p.n == kMaxVertices ? ~Mask{0} : bit_of(p.n) - 1;
      return has_clique(p, all, k);
    }
    return contains_copy(unpack(p), target);
  }

  std::optional<std::pair<EdgeList, EdgeList>> disjoint_copies(const Packed& p) const {
    if (clique_target) {
      std::vector<Mask> cliques;
      Mask all = p.n == kMaxVertices ? ~Mask{0} : bit_of(p.n) - 1;
      collect_cliques(p, 0, all, k, cliques);
      for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j)
          if (std::popcount(cliques[i] & cliques[j]) <= 1)
            return std::make_pair(clique_edge_list(cliques[i]), clique_edge_list(cliques[j]));
      return std::nullopt;
    }
    auto pair = two_edge_disjoint_copies(unpack(p), target);
    if (!pair) return std::nullopt;
    auto conv = [](const std::vector<Edge>& es) {
      EdgeList out;
      for (const auto& e : es)
        out.emplace_back(static_cast<int>(e.u.value), static_cast<int>(e.v.value));
      return out;
    };
    return std::make_pair(conv(pair->first.edges), conv(pair->second.edges));
  }

  // Last-round moves: one target copy on each side, everything else on side A.
  bool for_each_final_move(const Packed& p, const std::function<bool(PackedMove&)>& visit) {
    bool stopped = false;
    for_each_nonempty_matching(p, [&](const EdgeList& m) {
      charge(&SolveStats::matchings);
      const auto plus = grow(p, m);
      auto copies = disjoint_copies(plus);
      if (!copies) return true;
      PackedMove mv;
      mv.matching = m;
      auto in_b = copies->second;
      std::sort(in_b.begin(), in_b.end());
      mv.kept_a.n = mv.kept_b.n = plus.n;
      for (const auto& e : edges_of(plus)) {
        const bool b = std::binary_search(in_b.begin(), in_b.end(), e);
        (b ? mv.part_b : mv.part_a).push_back(e);
        (b ? mv.kept_b : mv.kept_a).add(e.first, e.second);
      }
      stopped = !visit(mv);
      return !stopped;
    });
    return !stopped;
  }

  // Moves in (matching, partition) lexicographic order; partition bit i
  // puts intermediate edge i on side B.
  bool for_each_move(const Packed& p, const std::function<bool(PackedMove&)>& visit) {
    std::unordered_set<std::string> seen;
    bool stopped = false;
    for_each_nonempty_matching(p, [&](const EdgeList& m) {
      charge(&SolveStats::matchings);
      const auto plus = grow(p, m);
      if (options.dedup_moves && !seen.insert(canonical_key(plus)).second) return true;
      const auto edges = edges_of(plus);
      const auto count = edges.size();
      if (count > options.max_partition_edges || count >= 63)
        throw BudgetExceeded("intermediate graph has " + std::to_string(count) +
                             " edges; exhaustive partitioning is capped at " +
                             std::to_string(options.max_partition_edges));
      const int free_bits = options.halve_partitions && count > 0 ? static_cast<int>(count) - 1
                                                                  : static_cast<int>(count);
      const std::uint64_t total = std::uint64_t{1} << free_bits;
      for (std::uint64_t x = 0; x < total; ++x) {
        charge(&SolveStats::partitions);
        const std::uint64_t mask = options.halve_partitions ? x << 1 : x;
        PackedMove mv;
        mv.matching = m;
        mv.kept_a.n = mv.kept_b.n = plus.n;
        for (std::size_t i = 0; i < count; ++i) {
          const auto [a, b] = edges[i];
          if ((mask >> i) & 1U) {
            mv.part_b.push_back(edges[i]);
            mv.kept_b.add(a, b);
          } else {
            mv.part_a.push_back(edges[i]);
            mv.kept_a.add(a, b);
          }
        }
        if (!visit(mv)) {
          stopped = true;
          return false;
        }
      }
      return true;
    });
    return !stopped;
  }

  bool wins(const Packed& p, int depth) {
    charge(&SolveStats::positions);
    if (contains_target(p)) return true;
    if (depth == 0) return false;
    std::string key;
    if (options.memoize) {
      key = canonical_key(p);
      if (auto it = memo.find(key); it != memo.end()) {
        if (it->second.win_within <= depth) {
          ++stats.memo_hits;
          return true;
        }
        if (it->second.loss_upto >= depth) {
          ++stats.memo_hits;
          return false;
        }
      }
    }
    bool result = false;
    if (depth == 1) {
      result = !for_each_final_move(p, [](PackedMove&) { return false; });
    } else {
      result = !for_each_move(p, [&](PackedMove& mv) {
        return !(wins(mv.kept_a, depth - 1) && wins(mv.kept_b, depth - 1));
      });
    }
    if (options.memoize) {
      auto& e = memo[key];
      if (result) e.win_within = std::min(e.win_within, depth);
      else e.loss_upto = std::max(e.loss_upto, depth);
    }
    return result;
  }

  std::optional<int> value(const Packed& p, int cap) {
    for (int t = 0; t <= cap; ++t)
      if (wins(p, t)) return t;
    return std::nullopt;
  }

  PackedMove winning_move(const Packed& p, int depth) {
    std::optional<PackedMove> found;
    auto take = [&](PackedMove& mv) {
      found = std::move(mv);
      return false;
    };
    if (depth == 1) {
      for_each_final_move(p, take);
    } else {
      for_each_move(p, [&](PackedMove& mv) {
        if (wins(mv.kept_a, depth - 1) && wins(mv.kept_b, depth - 1)) return take(mv);
        return true;
      });
    }
    if (!found) throw std::logic_error("no winning move at a winning position");
    return std::move(*found);
  }

  Transcript principal_variation(const Graph& seed, Packed p, int t) {
    GameState state(seed);
    while (t > 0) {
      auto mv = winning_move(p, t);
      const int ta = *value(mv.kept_a, t - 1);
      const int tb = *value(mv.kept_b, t - 1);
      const auto choice = tb > ta ? ChooserChoice::kKeepB : ChooserChoice::kKeepA;
      const auto& g = state.graph();
      const auto w = g.next_vertex_id();
      auto id = [&](int i) {
        return i == static_cast<int>(g.vertex_count()) ? w : g.id_at(static_cast<std::size_t>(i));
      };
      auto to_edges = [&](const EdgeList& es) {
        std::vector<Edge> out;
        for (auto [a, b] : es) out.push_back(Edge::of(id(a), id(b)));
        std::sort(out.begin(), out.end());
        return out;
      };
      BuilderMove move{Matching::of(g, to_edges(mv.matching)), to_edges(mv.part_a),
                       to_edges(mv.part_b)};
      state = play_round(state, move, choice);
      if (choice == ChooserChoice::kKeepA) {
        p = mv.kept_a;
        t = ta;
      } else {
        p = mv.kept_b;
        t = tb;
      }
    }
    return state.transcript();
  }
};

Solver::Solver(Graph target, SolverOptions options)
    : impl_(std::make_unique<Impl>(std::move(target), options)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

const Graph& Solver::target() const { return impl_->target; }
const SolveStats& Solver::stats() const { return impl_->stats; }
std::size_t Solver::memo_size() const { return impl_->memo.size(); }

bool Solver::wins_within(const Graph& g, int rounds) {
  if (rounds < 0) throw InvalidInput("rounds must be >= 0");
  return impl_->wins(pack(g, rounds), rounds);
}

SolveResult Solver::solve(const Graph& seed, int cap) {
  if (cap < 0) throw InvalidInput("cap must be >= 0");
  if (seed.empty()) throw InvalidInput("seed graph is empty");
  const auto before = impl_->stats;
  const auto p = pack(seed, cap);
  SolveResult result{SurvivesCap{cap}, {}, {}};
  if (auto t = impl_->value(p, cap)) {
    result.verdict = WinsIn{*t};
    if (impl_->options.principal_variation)
      result.principal_variation = impl_->principal_variation(seed, p, *t);
  }
  const auto& after = impl_->stats;
  result.stats = {after.positions - before.positions, after.matchings - before.matchings,
                  after.partitions - before.partitions, after.memo_hits - before.memo_hits};
  return result;
}

SolveResult solve(const Graph& seed, const Graph& target, int cap, const SolverOptions& options) {
  Solver solver(target, options);
  return solver.solve(seed, cap);
}

std::optional<BuilderMove> one_round_win(const Graph& g, const Graph& target) {
  std::optional<BuilderMove> found;
  for_each_matching(g, 1, g.vertex_count() / 2, [&](const Matching& m) {
    const auto inter = dpg_step(g, m, 1);
    auto pair = two_edge_disjoint_copies(inter.graph, target);
    if (!pair) return true;
    found = assemble_move(inter.graph, m, pair->first.edges, pair->second.edges);
    return false;
  });
  return found;
}

ChooserChoice best_chooser_choice(const Graph& intermediate, const BuilderMove& move,
                                  const Graph& target, int cap, const SolverOptions& options) {
  SolverOptions o = options;
  o.principal_variation = false;
  Solver solver(target, o);
  auto rank = [&](ChooserChoice c) {
    const auto r = solver.solve(apply_choice(intermediate, move, c), cap);
    if (const auto* w = std::get_if<WinsIn>(&r.verdict)) return w->rounds;
    return INT_MAX;
  };
  return rank(ChooserChoice::kKeepB) > rank(ChooserChoice::kKeepA) ? ChooserChoice::kKeepB
                                                                   : ChooserChoice::kKeepA;
}

}  // namespace dpg
