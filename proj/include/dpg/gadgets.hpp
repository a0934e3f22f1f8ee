#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

enum class Family {
  kPath,                     // v1 ... vn
  kCycle,                    // v1 ... vn v1
  kFanH,                     // four triangles z a_i b_i, two leaves on each a_i, b_i
  kRho4Seed,                 // 16-cycle c1..c16, two leaves c_i', c_i'' on each
  kSupportedCliqueTemplate,  // K_r on k1..kr plus one pendant leaf l_i per k_i
};

struct GadgetSpec {
  Family family = Family::kPath;
  std::size_t n = 0;  // vertex count for paths/cycles, r for the clique template

  static GadgetSpec path(std::size_t n) { return {Family::kPath, n}; }
  static GadgetSpec cycle(std::size_t n) { return {Family::kCycle, n}; }
  static GadgetSpec fan_h() { return {Family::kFanH, 0}; }
  static GadgetSpec rho4_seed() { return {Family::kRho4Seed, 0}; }
  static GadgetSpec supported_template(std::size_t r) {
    return {Family::kSupportedCliqueTemplate, r};
  }
};

/// Family name as used on the command line: path, cycle, fanh, rho4seed, supported-template.
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
bool family_takes_n(Family f);

/// Labeled graph for the gadget description. Labels are the usual proof names (v1, a1'', c16 ...);
/// ids follow natural label order. Throws InvalidInput for a bad n.
Graph generate(const GadgetSpec& spec);

/// Builds a graph from labeled edges; ids assigned by natural label order.
Graph labeled_graph(const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::string, std::string>>& edges);

/// Vertex with the given label; throws InvalidInput if absent.
VertexId vertex_named(const Graph& g, const std::string& label);

/// Compares labels with digit runs as numbers: v2 < v10, a1 < a1' < a1''.
bool natural_less(const std::string& a, const std::string& b);

namespace claim {
struct TriangleFree {};
struct CliqueFree { std::size_t r; };  // K_r-free
struct VertexCount { std::size_t n; };
struct EdgeCount { std::size_t m; };
struct SupportedCopies { std::size_t r; std::size_t count; };  // at least `count` supported cores
}  // namespace claim

using Claim = std::variant<claim::TriangleFree, claim::CliqueFree, claim::VertexCount,
                           claim::EdgeCount, claim::SupportedCopies>;

struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::string witness;  // counterexample or observed value on failure
};

struct CertificationReport {
  std::vector<ClaimResult> results;
  bool all_pass() const;
};

CertificationReport certify(const Graph& g, const std::vector<Claim>& claims);

}  // namespace dpg
