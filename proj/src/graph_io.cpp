#include "dpg/graph_io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "dpg/errors.hpp"

namespace dpg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_index(std::istringstream& ss, std::size_t line, std::size_t n,
                          const char* what) {
  long long v = -1;
  if (!(ss >> v)) throw ParseError(line, std::string("expected ") + what);
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    throw ParseError(line, std::string(what) + " " + std::to_string(v) + " out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::map<std::uint32_t, int> provenance;
  std::map<std::uint32_t, std::string> labels;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty()) continue;
    if (text[0] == '#') {
      std::istringstream ss(text.substr(1));
      std::string keyword;
      ss >> keyword;
      if (keyword != "provenance" && keyword != "label") continue;
      if (!have_header) throw ParseError(line, "'# " + keyword + "' before the 'n m' header");
      const auto v = parse_index(ss, line, n, "vertex");
      if (keyword == "provenance") {
        int round = 0;
        if (!(ss >> round) || round < 1) throw ParseError(line, "provenance round must be >= 1");
        provenance[v] = round;
      } else {
        std::string name;
        std::getline(ss, name);
        name = trim(name);
        if (name.empty()) throw ParseError(line, "empty label");
        labels[v] = name;
      }
      continue;
    }
    std::istringstream ss(text);
    if (!have_header) {
      long long nn = -1, mm = -1;
      if (!(ss >> nn >> mm) || nn < 0 || mm < 0)
        throw ParseError(line, "expected header 'n m' with non-negative integers");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
    } else {
      const auto u = parse_index(ss, line, n, "vertex");
      const auto v = parse_index(ss, line, n, "vertex");
      std::string extra;
      if (ss >> extra) throw ParseError(line, "trailing token '" + extra + "'");
      if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u));
      edges.push_back(Edge::of(u, v));
    }
    if (edges.size() > m) throw ParseError(line, "more than " + std::to_string(m) + " edges");
  }
  if (!have_header) throw ParseError(line, "missing 'n m' header");
  if (edges.size() != m)
    throw ParseError(line, "expected " + std::to_string(m) + " edges, found " +
                               std::to_string(edges.size()));
  std::vector<VertexInfo> vs;
  for (std::uint32_t i = 0; i < n; ++i) {
    VertexInfo vi{VertexId{i}, Provenance::seed(), {}};
    if (auto it = provenance.find(i); it != provenance.end())
      vi.provenance = Provenance::created_at(it->second);
    if (auto it = labels.find(i); it != labels.end()) vi.label = it->second;
    vs.push_back(std::move(vi));
  }
  try {
    return Graph(std::move(vs), std::move(edges));
  } catch (const InvalidInput& e) {
    throw ParseError(line, e.what());
  }
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& v = g.vertices()[i];
    if (auto r = v.provenance.round()) out << "# provenance " << i << ' ' << *r << '\n';
    if (!v.label.empty()) out << "# label " << i << ' ' << v.label << '\n';
  }
  for (const auto& e : g.edges()) out << g.index_of(e.u) << ' ' << g.index_of(e.v) << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  auto quoted = [&](VertexId v) {
    std::string s = "\"";
    for (char c : g.display_name(v)) {
      if (c == '"' || c == '\\') s.push_back('\\');
      s.push_back(c);
    }
    return s + "\"";
  };
  out << "graph " << name << " {\n";
  for (const auto& v : g.vertices()) {
    out << "  " << quoted(v.id);
    if (!v.provenance.is_seed()) out << " [shape=box]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) out << "  " << quoted(e.u) << " -- " << quoted(e.v) << ";\n";
  out << "}\n";
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  write_dot(out, g, name);
  return out.str();
}

}  // namespace dpg
