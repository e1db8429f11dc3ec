#pragma once

#include <string_view>
#include <vector>

#include "cactuslab/graph.hpp"

namespace cactuslab {

/// Blocks (maximal 2-connected pieces or bridges) of a graph.
///
/// Blocks are ordered by their smallest edge index. Isolated vertices belong
/// to no block and therefore have block degree zero.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;            // edge ids, ascending
  std::vector<std::vector<VertexId>> block_vertices;  // ascending
  std::vector<int> block_component;                // component index of each block
  std::vector<VertexId> cut_vertices;              // ascending
  std::vector<std::vector<int>> block_membership;  // vertex -> block indices

  int block_degree(VertexId v) const {
    return static_cast<int>(block_membership[static_cast<std::size_t>(v)].size());
  }
  bool is_bridge(int b) const { return blocks[static_cast<std::size_t>(b)].size() == 1; }
  /// A block with as many edges as vertices (and at least three) is a cycle.
  bool is_cycle(int b) const {
    const auto i = static_cast<std::size_t>(b);
    return blocks[i].size() >= 3 && blocks[i].size() == block_vertices[i].size();
  }
};

BlockDecomposition block_decomposition(const Graph& g);

/// H[u, v]: the union of the blocks on the block-cut tree path from u to v.
/// For u == v the result is the single vertex u.
Graph block_path(const Graph& g, std::string_view u, std::string_view v);

/// Block ids on the block-cut tree path between u and v (empty when u == v).
std::vector<int> block_path_blocks(const Graph& g, const BlockDecomposition& bd, VertexId u,
                                   VertexId v);

/// True iff |V| > k and no vertex set of size < k disconnects g. Supports
/// k in {1, 2, 3}; separators are enumerated directly.
bool is_k_connected(const Graph& g, int k);

/// Connectivity of g with the marked vertices removed.
bool connected_without(const Graph& g, const std::vector<char>& removed);

}  // namespace cactuslab
