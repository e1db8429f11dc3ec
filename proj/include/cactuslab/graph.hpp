#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cactuslab {

using VertexId = int;
using LabelPair = std::pair<std::string, std::string>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge between two vertex ids, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over string labels.
///
/// Vertices and edges keep insertion order, which every algorithm in the
/// library iterates in; this is what makes results reproducible.
class Graph {
 public:
  Graph() = default;

  static Graph from_labels(const std::vector<std::string>& vertices,
                           const std::vector<LabelPair>& edges);

  /// Adds a new vertex; throws if the label already exists.
  VertexId add_vertex(const std::string& label);
  /// Returns the id of `label`, adding it first if absent.
  VertexId ensure_vertex(const std::string& label);

  /// Adds edge ab and returns its index. Re-adding an edge is a no-op that
  /// returns the existing index; self-loops throw.
  int add_edge(VertexId a, VertexId b);
  int add_edge(const std::string& a, const std::string& b);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  VertexId id(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& incident_edges(VertexId v) const { return incident_[static_cast<std::size_t>(v)]; }
  std::size_t degree(VertexId v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  std::size_t max_degree() const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::optional<int> edge_id(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }
  bool has_edge(std::string_view a, std::string_view b) const;

  /// Edge endpoints as labels, lexicographically ordered.
  LabelPair edge_labels(int e) const;

 private:
  static std::uint64_t key(VertexId a, VertexId b);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<int>> incident_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
};

/// Same vertex set and edge set, ignoring insertion order.
bool same_graph(const Graph& a, const Graph& b);

/// g[vs ∩ V(g)]; labels not in g are ignored.
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& vs);
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs);

/// g - U for a set U mixing vertices and edges. Unknown items throw.
Graph delete_elements(const Graph& g, const std::vector<std::string>& vertices,
                      const std::vector<LabelPair>& edges = {});

/// (V(g1) ∪ V(g2), E(g1) ∪ E(g2)) with vertices identified by label.
Graph graph_union(const Graph& g1, const Graph& g2);

/// Spanning subgraph of g keeping only the listed edge indices.
Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids);
/// Subgraph of g formed by the given label edges; every vertex of g is kept.
Graph spanning_subgraph(const Graph& g, const std::vector<LabelPair>& edges);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

std::vector<LabelPair> edge_label_list(const Graph& g);

}  // namespace cactuslab
