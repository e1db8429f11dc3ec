#include "cactuslab/embedding.hpp"

#include <algorithm>
#include <unordered_map>

namespace cactuslab {

namespace {

bool rotation_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool same_cyclic_sequence(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (rotation_equal(a, b)) return true;
  std::vector<VertexId> r(b.rbegin(), b.rend());
  return rotation_equal(a, r);
}

FaceReport check_embedding(const Graph& g, const RotationEmbedding& emb) {
  const std::size_t n = g.num_vertices();
  if (emb.rotation.size() != n) throw Error("rotation system does not cover the graph");

  // position[v][w] = index of w in rotation[v]
  std::vector<std::unordered_map<VertexId, std::size_t>> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = emb.rotation[v];
    if (rot.size() != g.degree(static_cast<VertexId>(v)))
      throw Error("rotation at '" + g.label(static_cast<VertexId>(v)) + "' does not match its degree");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (!g.has_edge(static_cast<VertexId>(v), rot[i]) || position[v].contains(rot[i]))
        throw Error("rotation at '" + g.label(static_cast<VertexId>(v)) +
                    "' is inconsistent with the edge set");
      position[v][rot[i]] = i;
    }
  }

  // Darts are (edge, direction); direction 0 means u -> v.
  const std::size_t m = g.num_edges();
  std::vector<char> used(2 * m, 0);
  auto dart_of = [&](VertexId from, VertexId to) {
    const int e = *g.edge_id(from, to);
    return static_cast<std::size_t>(2 * e + (g.edge(e).u == from ? 0 : 1));
  };

  FaceReport report;
  const auto comps = connected_components(g);
  std::vector<int> comp_of(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::vector<long> faces_per_comp(comps.size(), 0);

  for (std::size_t d = 0; d < 2 * m; ++d) {
    if (used[d]) continue;
    const auto& e0 = g.edge(static_cast<int>(d / 2));
    VertexId from = d % 2 == 0 ? e0.u : e0.v;
    VertexId to = d % 2 == 0 ? e0.v : e0.u;
    std::vector<VertexId> face;
    while (!used[dart_of(from, to)]) {
      used[dart_of(from, to)] = 1;
      face.push_back(from);
      const auto& rot = emb.rotation[static_cast<std::size_t>(to)];
      const std::size_t i = position[static_cast<std::size_t>(to)][from];
      const VertexId next = rot[(i + 1) % rot.size()];
      from = to;
      to = next;
    }
    ++faces_per_comp[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(face.front())])];
    report.faces.push_back(std::move(face));
  }

  report.euler_holds = true;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long edges = 0;
    for (auto v : comps[c]) edges += static_cast<long>(g.degree(v));
    edges /= 2;
    // A lone vertex has one face and no darts.
    const long faces = edges == 0 ? 1 : faces_per_comp[c];
    const long chi = static_cast<long>(comps[c].size()) - edges + faces;
    report.euler_characteristics.push_back(chi);
    if (chi != 2) report.euler_holds = false;
  }
  report.face_count = report.faces.size();
  report.outer_face_matches =
      std::any_of(report.faces.begin(), report.faces.end(),
                  [&](const auto& f) { return same_cyclic_sequence(f, emb.outer_face); });
  return report;
}

}  // namespace cactuslab
