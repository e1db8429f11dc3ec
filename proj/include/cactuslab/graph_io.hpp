#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactuslab/embedding.hpp"
#include "cactuslab/graph.hpp"

namespace cactuslab {

/// {"vertices": [...], "edges": [["a","b"], ...]} with each edge's endpoints in
/// lexicographic order.
nlohmann::json graph_to_json(const Graph& g);
/// Throws Error on any schema violation (unknown endpoint, self-loop, ...).
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const Graph& g, const RotationEmbedding& emb);
RotationEmbedding embedding_from_json(const Graph& g, const nlohmann::json& j);

struct DotStyle {
  std::vector<VertexId> upper_path;
  std::vector<VertexId> lower_path;
  std::vector<VertexId> apexes;
  std::vector<LabelPair> highlight_edges;
};

std::string graph_to_dot(const Graph& g, const DotStyle& style = {});

}  // namespace cactuslab
