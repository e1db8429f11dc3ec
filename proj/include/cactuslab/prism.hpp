#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cactuslab/families.hpp"
#include "cactuslab/graph.hpp"
#include "cactuslab/search.hpp"

namespace cactuslab {

enum class Side { alpha, beta };

/// (base, side); serialized as "base@a" or "base@b".
struct PrismVertex {
  std::string base;
  Side side = Side::alpha;
  friend bool operator==(const PrismVertex&, const PrismVertex&) = default;
};

std::string prism_label(std::string_view base, Side side);
PrismVertex parse_prism_label(std::string_view label);
std::string flip_label(std::string_view label);

/// g □ K2: all alpha vertices, then all beta vertices.
Graph prism(const Graph& g);

/// Side-swapped copy of a subgraph of a prism.
Graph reflect(const Graph& s);
std::vector<LabelPair> reflect_edges(const std::vector<LabelPair>& edges);

/// Hamilton cycle of prism(q) for a good even cactus q, containing the
/// vertical edge at every block-degree-one vertex. Throws unless q is a good
/// even cactus with at least one edge and every required vertex has block
/// degree one. The cycle is closed (first vertex not repeated).
std::vector<std::string> cactus_prism_hamilton(const Graph& q, const std::vector<std::string>& required = {});

/// Endpoint declaration of a fragment path system, in prism labels of the
/// fragment's local names.
struct PathSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pairs;
  int w_index = 0;  // the w vertex joined to s (S-type specs)
  int x_index = 0;  // the x vertex joined to t (S-type specs)
};

/// (l,α)-(l,β) and (r,α)-(r,β).
PathSpec spec_L();
/// (l,α)-(w_w,β), (l,β)-(r,β), (r,α)-(x_x,α); printed indices w = n, x = 2n+1.
PathSpec spec_S(int w, int x);
/// (l,α)-(w_w,β), (l,β)-(r,β), (r,α)-(x_x,β); printed indices w = n, x = 2n.
PathSpec spec_S_tilde(int w, int x);

struct PathSystem {
  PathSpec spec;
  std::vector<LabelPair> edges;  // over prism labels of the fragment
};

struct PathSystemResult {
  SearchOutcome outcome;
  PathSystem system;  // edges empty unless found
};

/// Exact search for a spanning linear forest of prism(chart) realizing the
/// spec. Throws if a spec endpoint is not a vertex of the prism.
PathSystemResult solve_path_system(const FragmentChart& chart, const PathSpec& spec, const Budget& budget = {});

struct StitchResult {
  int n = 0;
  Graph prism_graph;
  std::vector<std::string> cycle;
  PathSystem L, S, S_tilde;
  /// One line per spec choice (printed or shifted) for the record.
  std::vector<std::string> notes;
};

/// The stitched Hamilton cycle of G(D_n) □ K2 built from kA, a spanning good
/// even cactus of A with b(u1) = b(u3) = 1. Throws naming the fragment whose
/// path system could not be found, or if the assembly is not a Hamilton cycle.
StitchResult stitch_hamilton_GD(int n, const Graph& kA, const Budget& budget = {});

/// Walks a 2-regular connected edge set into a closed sequence starting at
/// the smallest label.
std::vector<std::string> sequence_from_cycle_edges(const std::vector<LabelPair>& edges);

}  // namespace cactuslab
