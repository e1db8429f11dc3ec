#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactuslab/graph.hpp"

namespace cactuslab {

/// Independent witness checkers. None of them reuses search code.

struct CycleCheck {
  bool edges_in_graph = false;
  bool spanning = false;
  bool two_regular = false;
  bool connected = false;
  bool ok() const { return edges_in_graph && spanning && two_regular && connected; }
};

/// Checks an edge set against "Hamilton cycle of g".
CycleCheck check_hamilton_cycle_edges(const Graph& g, const std::vector<LabelPair>& edges);
/// Closed vertex sequence (first vertex not repeated).
CycleCheck check_hamilton_cycle(const Graph& g, const std::vector<std::string>& sequence);

bool is_hamilton_path(const Graph& g, const std::vector<std::string>& sequence,
                      std::optional<std::pair<std::string, std::string>> endpoints = std::nullopt);

/// Closed walk (first vertex not repeated) through every vertex, each at
/// most k times.
bool is_k_walk(const Graph& g, const std::vector<std::string>& sequence, int k);

bool is_k_tree(const Graph& g, const std::vector<LabelPair>& edges, int k);

/// Spanning disjoint paths whose endpoint pairs are exactly `pairs`.
bool is_linear_forest(const Graph& g, const std::vector<LabelPair>& edges,
                      const std::vector<std::pair<std::string, std::string>>& pairs);

/// Consecutive pairs of a closed sequence.
std::vector<LabelPair> cycle_edges(const std::vector<std::string>& sequence);

}  // namespace cactuslab
