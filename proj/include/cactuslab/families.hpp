#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactuslab/embedding.hpp"
#include "cactuslab/graph.hpp"

namespace cactuslab {

enum class ChartKind { I, A, C, D, Gminus, G };
enum class FragmentType { C, D };

std::string to_string(ChartKind k);
std::string to_string(FragmentType t);

/// One fragment copy inside a chain: A^i or B^i.
struct FragmentCopy {
  std::string id;  // "A3", "B5"
  char type = 'A';
  int index = 0;
  VertexId first = 0;  // u1 or l
  VertexId last = 0;   // u3 or r
  std::vector<VertexId> vertices;
  std::vector<int> edges;
};

/// A built family graph plus the chain metadata the checks need.
///
/// Fragment copies are namespaced ("A3:u2", "B5:w2"). Identified junctions
/// carry canonical labels: J{i-1} = u1 of A^i = r of B^{i-1}, J{m} = u3 of
/// the last A, and L{i} = u3 of A^i = l of B^i. The alias table maps every
/// namespaced name of a junction to its canonical label.
struct FragmentChart {
  Graph graph;
  ChartKind kind = ChartKind::I;
  int n = 0;
  std::optional<FragmentType> base;
  std::pair<VertexId, VertexId> endvertices{0, 0};
  std::vector<VertexId> upper_path;
  std::vector<VertexId> lower_path;
  std::vector<VertexId> junctions;
  std::map<std::string, std::string> aliases;
  std::vector<VertexId> u2_set;
  std::vector<FragmentCopy> copies;
  RotationEmbedding embedding;
  std::optional<VertexId> s;
  std::optional<VertexId> t;
  int a_count = 0;  // number of A copies (8 for the standard chain)

  /// Vertex id for a canonical label or any alias.
  VertexId resolve(std::string_view name) const;
  std::string canonical(std::string_view name) const;
  std::map<std::string, std::vector<VertexId>> fragment_spans() const;
  const FragmentCopy& copy(std::string_view id) const;

  bool is_chain() const { return kind == ChartKind::Gminus || kind == ChartKind::G; }
  /// The chain without apexes (the graph itself for Gminus).
  Graph gminus() const;
  /// l^i and r^i with the boundary conventions: indices below 1 map to u1 of
  /// A^1, indices above the last B map to u3 of the last A.
  VertexId left_end(int i) const;
  VertexId right_end(int i) const;
};

FragmentChart gadget_I();
FragmentChart fragment_A();
FragmentChart fragment_C(int n);
FragmentChart fragment_D(int n);
FragmentChart fragment_B(FragmentType type, int n);

/// G^-(B): eight copies of A and seven of B joined in series.
FragmentChart build_chain(FragmentType type, int n);
/// G(B): the chain plus apex s on the upper path and apex t on the lower path.
FragmentChart build_G(FragmentType type, int n);

/// Chains of another length. Only used for small test instances; the
/// standard constructions always use eight A copies.
FragmentChart build_chain_with(FragmentType type, int n, int a_count);
FragmentChart build_G_with(FragmentType type, int n, int a_count);

/// The eight apex edges of the displayed G(C_n) cactus, exactly as printed
/// (including "t r^5" twice-adjacent to r^5).
std::vector<LabelPair> gc_formula_apex_edges(int n);
/// Non-apex edges of the displayed G(C_n) cactus given a cactus kA of A.
std::vector<LabelPair> gc_formula_chain_edges(const FragmentChart& g, const Graph& kA);

/// Assembles the displayed spanning subgraph of G(C_n). Throws naming the
/// first formula edge that is not an edge of G.
Graph certificate_cactus_GC(int n, const Graph& kA);
Graph certificate_cactus_GC(const FragmentChart& g, const Graph& kA,
                            const std::vector<LabelPair>& apex_edges);

/// A variant of the displayed cactus that verifies with these labels: the
/// B^5 apex edges trade sides (s w_{n+1}^5, t r^5) and B^7 drops l v1
/// instead, closed by the cycle t l^7 ... v1^7 t.
Graph adjusted_cactus_GC(const FragmentChart& g, const Graph& kA);

/// Graph plus chart metadata (paths, junctions, copies, embedding).
nlohmann::json chart_to_json(const FragmentChart& chart);
/// DOT with the upper path, lower path and apexes colored.
std::string chart_to_dot(const FragmentChart& chart, const std::vector<LabelPair>& highlight = {});

/// Maps a subgraph of A (local labels) onto copy A^i of the chain.
std::vector<LabelPair> map_into_copy(const FragmentChart& chain, int i, char type,
                                     const std::vector<LabelPair>& local_edges);

}  // namespace cactuslab
