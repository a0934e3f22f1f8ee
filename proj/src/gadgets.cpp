#include "dpg/gadgets.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "dpg/cliques.hpp"
#include "dpg/errors.hpp"
#include "dpg/supported.hpp"

namespace dpg {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      const auto na = std::stoull(a.substr(i, ie - i));
      const auto nb = std::stoull(b.substr(j, je - j));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

Graph labeled_graph(const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::string, std::string>>& edges) {
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end(), natural_less);
  std::map<std::string, VertexId> id;
  std::vector<VertexInfo> vs;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const VertexId v{static_cast<std::uint32_t>(i)};
    if (!id.emplace(sorted[i], v).second) throw InvalidInput("duplicate label " + sorted[i]);
    vs.push_back({v, Provenance::seed(), sorted[i]});
  }
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) {
    auto ia = id.find(a), ib = id.find(b);
    if (ia == id.end() || ib == id.end()) throw InvalidInput("edge uses unknown label");
    es.push_back(Edge::of(ia->second, ib->second));
  }
  return Graph(std::move(vs), std::move(es));
}

VertexId vertex_named(const Graph& g, const std::string& label) {
  if (auto v = g.find_label(label)) return *v;
  throw InvalidInput("no vertex labeled '" + label + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kFanH: return "fanh";
    case Family::kRho4Seed: return "rho4seed";
    case Family::kSupportedCliqueTemplate: return "supported-template";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (auto f : {Family::kPath, Family::kCycle, Family::kFanH, Family::kRho4Seed,
                 Family::kSupportedCliqueTemplate})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

bool family_takes_n(Family f) {
  return f == Family::kPath || f == Family::kCycle || f == Family::kSupportedCliqueTemplate;
}

namespace {

std::string v(std::size_t i) { return "v" + std::to_string(i); }

Graph make_path_or_cycle(std::size_t n, bool cycle) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(v(i));
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(v(i), v(i + 1));
  if (cycle) edges.emplace_back(v(n), v(1));
  return labeled_graph(labels, edges);
}

Graph make_fan_h() {
  std::vector<std::string> labels{"z"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= 4; ++i) {
    const auto s = std::to_string(i);
    const auto a = "a" + s, b = "b" + s;
    for (const auto& x : {a, a + "'", a + "''", b, b + "'", b + "''"}) labels.push_back(x);
    edges.insert(edges.end(), {{"z", a}, {a, b}, {"z", b}, {a, a + "'"}, {a, a + "''"},
                               {b, b + "'"}, {b, b + "''"}});
  }
  return labeled_graph(labels, edges);
}

Graph make_rho4_seed() {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  auto c = [](std::size_t i) { return "c" + std::to_string(i); };
  for (std::size_t i = 1; i <= 16; ++i) {
    for (const auto& x : {c(i), c(i) + "'", c(i) + "''"}) labels.push_back(x);
    edges.emplace_back(c(i), c(i % 16 + 1));
    edges.emplace_back(c(i), c(i) + "'");
    edges.emplace_back(c(i), c(i) + "''");
  }
  return labeled_graph(labels, edges);
}

Graph make_supported_template(std::size_t r) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= r; ++i) {
    labels.push_back("k" + std::to_string(i));
    labels.push_back("l" + std::to_string(i));
    edges.emplace_back("k" + std::to_string(i), "l" + std::to_string(i));
    for (std::size_t j = i + 1; j <= r; ++j)
      edges.emplace_back("k" + std::to_string(i), "k" + std::to_string(j));
  }
  return labeled_graph(labels, edges);
}

std::string names(const Graph& g, std::span<const VertexId> vs) {
  std::string s;
  for (auto x : vs) {
    if (!s.empty()) s += ' ';
    s += g.display_name(x);
  }
  return s;
}

ClaimResult check_clique_free(const Graph& g, std::size_t r, std::string label) {
  const auto found = cliques_of_size(g, r);
  if (found.empty()) return {std::move(label), true, {}};
  return {std::move(label), false, "K" + std::to_string(r) + " on " + names(g, found.front())};
}

}  // namespace

Graph generate(const GadgetSpec& spec) {
  switch (spec.family) {
    case Family::kPath:
      if (spec.n < 1) throw InvalidInput("path needs n >= 1");
      return make_path_or_cycle(spec.n, false);
    case Family::kCycle:
      if (spec.n < 3) throw InvalidInput("cycle needs n >= 3");
      return make_path_or_cycle(spec.n, true);
    case Family::kFanH:
      return make_fan_h();
    case Family::kRho4Seed:
      return make_rho4_seed();
    case Family::kSupportedCliqueTemplate:
      if (spec.n < 2) throw InvalidInput("supported clique template needs r >= 2");
      return make_supported_template(spec.n);
  }
  throw InvalidInput("unknown gadget family");
}

bool CertificationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
}

CertificationReport certify(const Graph& g, const std::vector<Claim>& claims) {
  CertificationReport report;
  for (const auto& c : claims) {
    report.results.push_back(std::visit(
        [&](const auto& cl) -> ClaimResult {
          using T = std::decay_t<decltype(cl)>;
          if constexpr (std::is_same_v<T, claim::TriangleFree>) {
            return check_clique_free(g, 3, "triangle-free");
          } else if constexpr (std::is_same_v<T, claim::CliqueFree>) {
            return check_clique_free(g, cl.r, "K" + std::to_string(cl.r) + "-free");
          } else if constexpr (std::is_same_v<T, claim::VertexCount>) {
            const bool ok = g.vertex_count() == cl.n;
            return {"vertex-count=" + std::to_string(cl.n), ok,
                    ok ? "" : "found " + std::to_string(g.vertex_count())};
          } else if constexpr (std::is_same_v<T, claim::EdgeCount>) {
            const bool ok = g.edge_count() == cl.m;
            return {"edge-count=" + std::to_string(cl.m), ok,
                    ok ? "" : "found " + std::to_string(g.edge_count())};
          } else {
            const auto found = find_supported_copies(g, cl.r).size();
            const bool ok = found >= cl.count;
            return {"contains-supported-copies(" + std::to_string(cl.r) + "," +
                        std::to_string(cl.count) + ")",
                    ok, ok ? "" : "found " + std::to_string(found)};
          }
        },
        c));
  }
  return report;
}

}  // namespace dpg
