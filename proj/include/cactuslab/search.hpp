#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactuslab/graph.hpp"

namespace cactuslab {

enum class SearchStatus { found, none, timeout };
std::string to_string(SearchStatus s);

/// Wall-clock and node caps. A search that hits either cap reports timeout.
struct Budget {
  std::optional<std::chrono::milliseconds> wall;
  std::optional<std::uint64_t> nodes;

  static Budget unlimited() { return {}; }
  static Budget seconds(double s);
  /// Parses "90", "30s", "10m", "2h" (seconds when unitless).
  static Budget parse(const std::string& text);
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::none;
  std::vector<LabelPair> witness_edges;
  /// Vertex order for cycles, paths and walks (cycles and walks are closed:
  /// the first vertex is not repeated at the end).
  std::vector<std::string> witness_sequence;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  bool exhaustive = false;

  bool found() const { return status == SearchStatus::found; }
};

enum class CactusGoodness {
  any,            // no block degree cap
  good,           // every vertex in at most two blocks
  p_good,         // edge path between the endpoints, interior may reach 3
  p1p2_good,      // two edge paths, interiors may reach 3, shared interior exactly 4
  off_path_good,  // edge path between the endpoints, only its interior is unconstrained
};
std::string to_string(CactusGoodness g);

struct CactusConstraints {
  CactusGoodness goodness = CactusGoodness::good;
  bool even = true;
  std::optional<int> max_degree;
  std::vector<std::string> required_block_degree_1;
  std::optional<std::pair<std::string, std::string>> required_edge_path_endpoints;
  std::optional<std::pair<std::string, std::string>> second_edge_path_endpoints;
  std::vector<LabelPair> required_edges;
  std::vector<LabelPair> forbidden_edges;
};

/// Exact test of a spanning subgraph against the constraints, written
/// directly on top of analyze_cactus.
bool satisfies_constraints(const Graph& host, const Graph& q, const CactusConstraints& c);

SearchOutcome hamilton_cycle(const Graph& g, const Budget& budget = {});
SearchOutcome hamilton_path(const Graph& g, std::optional<std::pair<std::string, std::string>> endpoints,
                            const Budget& budget = {});

/// Branch and bound over edge subsets keeping the included edges a partial
/// cactus. Throws on inconsistent constraints.
SearchOutcome spanning_even_cactus(const Graph& g, const CactusConstraints& c, const Budget& budget = {});

struct EnumerationResult {
  std::uint64_t count = 0;
  std::uint64_t nodes_explored = 0;
  bool complete = true;  // false when the budget ran out or the visitor stopped
};

/// Calls visit on every spanning cactus meeting the constraints. Returning
/// false from visit stops the enumeration. Throws above `edge_guard` edges.
EnumerationResult enumerate_spanning_even_cacti(const Graph& g, const CactusConstraints& c,
                                                const std::function<bool(const Graph&)>& visit,
                                                const Budget& budget = {}, std::size_t edge_guard = 40);

/// Spanning closed walk visiting each vertex at most k times.
SearchOutcome k_walk(const Graph& g, int k, const Budget& budget = {});
/// Spanning tree with maximum degree at most k.
SearchOutcome k_tree(const Graph& g, int k, const Budget& budget = {});
/// Spanning vertex-disjoint paths, one per pair, with exactly those endpoints.
SearchOutcome linear_forest(const Graph& g, const std::vector<std::pair<std::string, std::string>>& pairs,
                            const Budget& budget = {});

}  // namespace cactuslab
