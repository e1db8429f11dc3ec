#include "cactuslab/graph_io.hpp"

#include <set>
#include <sstream>

namespace cactuslab {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : edge_label_list(g)) edges.push_back(json::array({a, b}));
  return json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_array() || !j["edges"].is_array())
    throw Error("graph JSON needs 'vertices' and 'edges' arrays");
  Graph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw Error("vertex labels must be strings");
    g.add_vertex(v.get<std::string>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error("edges must be pairs of labels");
    const auto a = e[0].get<std::string>();
    const auto b = e[1].get<std::string>();
    const auto before = g.num_edges();
    g.add_edge(g.id(a), g.id(b));
    if (g.num_edges() == before) throw Error("parallel edge '" + a + "'-'" + b + "'");
  }
  return g;
}

json embedding_to_json(const Graph& g, const RotationEmbedding& emb) {
  json rot = json::object();
  for (std::size_t v = 0; v < emb.rotation.size(); ++v) {
    json order = json::array();
    for (auto w : emb.rotation[v]) order.push_back(g.label(w));
    rot[g.label(static_cast<VertexId>(v))] = std::move(order);
  }
  json outer = json::array();
  for (auto v : emb.outer_face) outer.push_back(g.label(v));
  return json{{"rotation", std::move(rot)}, {"outer_face", std::move(outer)}};
}

RotationEmbedding embedding_from_json(const Graph& g, const json& j) {
  RotationEmbedding emb;
  emb.rotation.assign(g.num_vertices(), {});
  for (const auto& [label, order] : j.at("rotation").items()) {
    auto& rot = emb.rotation[static_cast<std::size_t>(g.id(label))];
    for (const auto& w : order) rot.push_back(g.id(w.get<std::string>()));
  }
  for (const auto& v : j.at("outer_face")) emb.outer_face.push_back(g.id(v.get<std::string>()));
  return emb;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string graph_to_dot(const Graph& g, const DotStyle& style) {
  std::set<VertexId> upper(style.upper_path.begin(), style.upper_path.end());
  std::set<VertexId> lower(style.lower_path.begin(), style.lower_path.end());
  std::set<VertexId> apex(style.apexes.begin(), style.apexes.end());
  std::set<std::pair<VertexId, VertexId>> upper_edges;
  std::set<std::pair<VertexId, VertexId>> lower_edges;
  auto collect = [](const std::vector<VertexId>& path, auto& into) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      into.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
  };
  collect(style.upper_path, upper_edges);
  collect(style.lower_path, lower_edges);
  std::set<LabelPair> highlight;
  for (auto [a, b] : style.highlight_edges) {
    if (b < a) std::swap(a, b);
    highlight.insert({a, b});
  }

  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    const auto v = static_cast<VertexId>(i);
    os << "  " << quoted(g.label(v));
    if (apex.contains(v))
      os << " [style=filled, fillcolor=gold]";
    else if (upper.contains(v) && lower.contains(v))
      os << " [color=purple]";
    else if (upper.contains(v))
      os << " [color=red]";
    else if (lower.contains(v))
      os << " [color=blue]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(static_cast<int>(i));
    const auto labels = g.edge_labels(static_cast<int>(i));
    os << "  " << quoted(labels.first) << " -- " << quoted(labels.second);
    if (highlight.contains(labels))
      os << " [penwidth=3]";
    else if (upper_edges.contains({e.u, e.v}))
      os << " [color=red]";
    else if (lower_edges.contains({e.u, e.v}))
      os << " [color=blue]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cactuslab
