#include "cactuslab/graph.hpp"

#include <algorithm>
#include <set>

namespace cactuslab {

Graph Graph::from_labels(const std::vector<std::string>& vertices,
                         const std::vector<LabelPair>& edges) {
  Graph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [a, b] : edges) g.add_edge(g.id(a), g.id(b));
  return g;
}

VertexId Graph::add_vertex(const std::string& label) {
  if (index_.contains(label)) throw Error("duplicate vertex label '" + label + "'");
  const auto v = static_cast<VertexId>(labels_.size());
  labels_.push_back(label);
  index_.emplace(label, v);
  adj_.emplace_back();
  incident_.emplace_back();
  return v;
}

VertexId Graph::ensure_vertex(const std::string& label) {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return add_vertex(label);
}

std::uint64_t Graph::key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

int Graph::add_edge(VertexId a, VertexId b) {
  const auto n = static_cast<VertexId>(labels_.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error("edge endpoint out of range");
  if (a == b) throw Error("self-loop at '" + labels_[static_cast<std::size_t>(a)] + "'");
  const auto k = key(a, b);
  if (auto it = edge_index_.find(k); it != edge_index_.end()) return it->second;
  const int e = static_cast<int>(edges_.size());
  edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  edge_index_.emplace(k, e);
  adj_[static_cast<std::size_t>(a)].push_back(b);
  adj_[static_cast<std::size_t>(b)].push_back(a);
  incident_[static_cast<std::size_t>(a)].push_back(e);
  incident_[static_cast<std::size_t>(b)].push_back(e);
  return e;
}

int Graph::add_edge(const std::string& a, const std::string& b) { return add_edge(id(a), id(b)); }

std::optional<VertexId> Graph::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

VertexId Graph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error("unknown vertex '" + std::string(label) + "'");
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

std::optional<int> Graph::edge_id(VertexId a, VertexId b) const {
  if (auto it = edge_index_.find(key(a, b)); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

bool Graph::has_edge(std::string_view a, std::string_view b) const {
  auto x = find(a);
  auto y = find(b);
  return x && y && has_edge(*x, *y);
}

LabelPair Graph::edge_labels(int e) const {
  const auto& ed = edge(e);
  const auto& a = label(ed.u);
  const auto& b = label(ed.v);
  return a < b ? LabelPair{a, b} : LabelPair{b, a};
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (const auto& l : a.labels())
    if (!b.contains(l)) return false;
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    auto [x, y] = a.edge_labels(static_cast<int>(e));
    if (!b.has_edge(x, y)) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<char> keep(g.num_vertices(), 0);
  for (auto v : vs) keep[static_cast<std::size_t>(v)] = 1;
  Graph h;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (keep[v]) h.add_vertex(g.label(static_cast<VertexId>(v)));
  for (const auto& e : g.edges())
    if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)])
      h.add_edge(g.label(e.u), g.label(e.v));
  return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& vs) {
  std::vector<VertexId> ids;
  for (const auto& l : vs)
    if (auto v = g.find(l)) ids.push_back(*v);
  return induced_subgraph(g, ids);
}

Graph delete_elements(const Graph& g, const std::vector<std::string>& vertices,
                      const std::vector<LabelPair>& edges) {
  std::vector<char> gone_v(g.num_vertices(), 0);
  std::vector<char> gone_e(g.num_edges(), 0);
  for (const auto& l : vertices) gone_v[static_cast<std::size_t>(g.id(l))] = 1;
  for (const auto& [a, b] : edges) {
    auto e = g.edge_id(g.id(a), g.id(b));
    if (!e) throw Error("unknown edge '" + a + "'-'" + b + "'");
    gone_e[static_cast<std::size_t>(*e)] = 1;
  }
  Graph h;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!gone_v[v]) h.add_vertex(g.label(static_cast<VertexId>(v)));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    if (gone_e[i] || gone_v[static_cast<std::size_t>(e.u)] || gone_v[static_cast<std::size_t>(e.v)]) continue;
    h.add_edge(g.label(e.u), g.label(e.v));
  }
  return h;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  Graph h;
  for (const auto& l : g1.labels()) h.ensure_vertex(l);
  for (const auto& l : g2.labels()) h.ensure_vertex(l);
  for (const auto& e : g1.edges()) h.add_edge(g1.label(e.u), g1.label(e.v));
  for (const auto& e : g2.edges()) h.add_edge(g2.label(e.u), g2.label(e.v));
  return h;
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
  Graph h;
  for (const auto& l : g.labels()) h.add_vertex(l);
  std::vector<int> sorted = edge_ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int e : sorted) h.add_edge(g.edge(e).u, g.edge(e).v);
  return h;
}

Graph spanning_subgraph(const Graph& g, const std::vector<LabelPair>& edges) {
  std::vector<int> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto e = g.edge_id(g.id(a), g.id(b));
    if (!e) throw Error("'" + a + "'-'" + b + "' is not an edge of the host graph");
    ids.push_back(*e);
  }
  return edge_subgraph(g, ids);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -1) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = c;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (auto w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<LabelPair> edge_label_list(const Graph& g) {
  std::vector<LabelPair> out;
  out.reserve(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) out.push_back(g.edge_labels(static_cast<int>(e)));
  return out;
}

}  // namespace cactuslab
