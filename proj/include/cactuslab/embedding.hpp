#pragma once

#include <vector>

#include "cactuslab/graph.hpp"

namespace cactuslab {

/// Combinatorial embedding: counter-clockwise neighbor order per vertex, plus
/// the face designated as unbounded.
struct RotationEmbedding {
  std::vector<std::vector<VertexId>> rotation;
  std::vector<VertexId> outer_face;
};

struct FaceReport {
  std::size_t face_count = 0;
  std::vector<std::vector<VertexId>> faces;
  /// V - E + F per connected component, in component order.
  std::vector<long> euler_characteristics;
  bool euler_holds = false;
  bool outer_face_matches = false;
};

/// Traces every face of the rotation system and checks Euler's formula on
/// each component. Throws if the rotation does not list exactly each
/// vertex's neighbors.
FaceReport check_embedding(const Graph& g, const RotationEmbedding& emb);

/// Equality of closed walks up to rotation and reversal.
bool same_cyclic_sequence(const std::vector<VertexId>& a, const std::vector<VertexId>& b);

}  // namespace cactuslab
