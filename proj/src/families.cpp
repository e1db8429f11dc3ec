#include "cactuslab/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "cactuslab/graph_io.hpp"

namespace cactuslab {

std::string to_string(ChartKind k) {
  switch (k) {
    case ChartKind::I: return "I";
    case ChartKind::A: return "A";
    case ChartKind::C: return "C";
    case ChartKind::D: return "D";
    case ChartKind::Gminus: return "Gminus";
    case ChartKind::G: return "G";
  }
  return "?";
}

std::string to_string(FragmentType t) { return t == FragmentType::C ? "C" : "D"; }

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

/// A fragment in local labels together with a straight-line planar drawing
/// whose upper path is the x-monotone upper envelope and whose lower path
/// is the lower envelope.
struct Template {
  std::vector<std::string> vertices;
  std::vector<Point> pos;
  std::vector<LabelPair> edges;
  std::vector<std::string> upper;
  std::vector<std::string> lower;
  double width = 0;

  void vertex(const std::string& name, double x, double y) {
    vertices.push_back(name);
    pos.push_back({x, y});
  }
  void path(const std::vector<std::string>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) edges.emplace_back(seq[i], seq[i + 1]);
  }
};

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

Template template_I() {
  Template t;
  t.width = 6;
  t.vertex("u1", 0, 0);
  t.vertex("u2", 6, 0);
  for (int k = 1; k <= 5; ++k) t.vertex(idx("v", k), k, 2);
  t.vertex("v6", 3, 1);
  for (int k = 7; k <= 11; ++k) t.vertex(idx("v", k), k - 6, -2);
  t.vertex("v12", 3, -1);
  // Each half is the 8-cycle u1 v1..v5 u2 v6 with the chord v3v6; the lower
  // half mirrors the upper one on v7..v12.
  for (int off : {0, 6}) {
    auto v = [&](int k) { return idx("v", k + off); };
    t.path({"u1", v(1), v(2), v(3), v(4), v(5), "u2"});
    t.edges.emplace_back("u1", v(6));
    t.edges.emplace_back(v(3), v(6));
    t.edges.emplace_back(v(6), "u2");
  }
  t.upper = {"u1", "v1", "v2", "v3", "v4", "v5", "u2"};
  t.lower = {"u1", "v7", "v8", "v9", "v10", "v11", "u2"};
  return t;
}

Template template_A() {
  const Template half = template_I();
  Template t;
  t.width = 12;
  auto second = [](const std::string& name) -> std::string {
    if (name == "u1") return "u2";
    if (name == "u2") return "u3";
    return idx("v", std::stoi(name.substr(1)) + 12);
  };
  t.vertex("u1", 0, 0);
  t.vertex("u2", 6, 0);
  t.vertex("u3", 12, 0);
  for (std::size_t i = 0; i < half.vertices.size(); ++i)
    if (half.vertices[i][0] == 'v') t.vertex(half.vertices[i], half.pos[i].x, half.pos[i].y);
  for (std::size_t i = 0; i < half.vertices.size(); ++i)
    if (half.vertices[i][0] == 'v') t.vertex(second(half.vertices[i]), half.pos[i].x + 6, half.pos[i].y);
  for (const auto& e : half.edges) t.edges.push_back(e);
  for (const auto& [a, b] : half.edges) t.edges.emplace_back(second(a), second(b));
  t.upper = half.upper;
  for (std::size_t i = 1; i < half.upper.size(); ++i) t.upper.push_back(second(half.upper[i]));
  t.lower = half.lower;
  for (std::size_t i = 1; i < half.lower.size(); ++i) t.lower.push_back(second(half.lower[i]));
  return t;
}

Template template_C(int n) {
  Template t;
  const double w = n + 2;
  t.width = w;
  t.vertex("l", 0, 0);
  for (int i = 1; i <= n + 1; ++i) t.vertex(idx("w", i), i, 1);
  t.vertex("r", w, 0);
  for (int i = 1; i <= n; ++i) t.vertex(idx("v", i), w * i / (n + 1), -1);
  t.upper.push_back("l");
  for (int i = 1; i <= n + 1; ++i) t.upper.push_back(idx("w", i));
  t.upper.push_back("r");
  t.lower.push_back("l");
  for (int i = 1; i <= n; ++i) t.lower.push_back(idx("v", i));
  t.lower.push_back("r");
  t.path(t.upper);
  std::vector<std::string> back(t.lower.rbegin(), t.lower.rend());
  t.path(back);
  return t;
}

Template template_D(int n) {
  Template t;
  const double w = n + 2;
  t.width = 2 * w;
  t.vertex("l", 0, 0);
  for (int i = 1; i <= n + 1; ++i) t.vertex(idx("w", i), i, 1);
  t.vertex("m", w, 0);
  for (int i = 1; i <= n; ++i) t.vertex(idx("v", i), w * i / (n + 1), -1);
  for (int i = 1; i <= n; ++i) t.vertex(idx("x", i), w + w * i / (n + 1), 1);
  // Lower arc of the second cycle: m, x_{2n+1}, ..., x_{n+1}, r.
  for (int i = n + 1; i <= 2 * n + 1; ++i) t.vertex(idx("x", i), w + (2 * n + 2 - i), -1);
  t.vertex("r", 2 * w, 0);

  std::vector<std::string> z1_upper{"l"};
  for (int i = 1; i <= n + 1; ++i) z1_upper.push_back(idx("w", i));
  z1_upper.push_back("m");
  std::vector<std::string> z1_lower{"l"};
  for (int i = 1; i <= n; ++i) z1_lower.push_back(idx("v", i));
  z1_lower.push_back("m");
  std::vector<std::string> z2_upper{"m"};
  for (int i = 1; i <= n; ++i) z2_upper.push_back(idx("x", i));
  z2_upper.push_back("r");
  std::vector<std::string> z2_lower{"m"};
  for (int i = 2 * n + 1; i >= n + 1; --i) z2_lower.push_back(idx("x", i));
  z2_lower.push_back("r");

  t.path(z1_upper);
  t.path(std::vector<std::string>(z1_lower.rbegin(), z1_lower.rend()));
  t.path(z2_upper);
  t.path(std::vector<std::string>(z2_lower.rbegin(), z2_lower.rend()));

  t.upper = z1_upper;
  t.upper.insert(t.upper.end(), z2_upper.begin() + 1, z2_upper.end());
  t.lower = z1_lower;
  t.lower.insert(t.lower.end(), z2_lower.begin() + 1, z2_lower.end());
  return t;
}

Template template_B(FragmentType type, int n) {
  return type == FragmentType::C ? template_C(n) : template_D(n);
}

/// Counter-clockwise rotation from coordinates. Apex s sits straight above
/// every upper-path vertex and t straight below every lower-path vertex.
RotationEmbedding rotation_from_layout(const Graph& g, const std::vector<Point>& pos,
                                       const std::vector<VertexId>& upper,
                                       const std::vector<VertexId>& lower,
                                       std::optional<VertexId> s, std::optional<VertexId> t) {
  RotationEmbedding emb;
  emb.rotation.assign(g.num_vertices(), {});
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto vid = static_cast<VertexId>(v);
    if (vid == s) {
      emb.rotation[v] = upper;
      continue;
    }
    if (vid == t) {
      emb.rotation[v].assign(lower.rbegin(), lower.rend());
      continue;
    }
    std::vector<std::pair<double, VertexId>> around;
    for (auto w : g.neighbors(vid)) {
      double angle = 0;
      if (w == s)
        angle = std::numbers::pi / 2;
      else if (w == t)
        angle = -std::numbers::pi / 2;
      else
        angle = std::atan2(pos[static_cast<std::size_t>(w)].y - pos[v].y,
                           pos[static_cast<std::size_t>(w)].x - pos[v].x);
      around.emplace_back(angle, w);
    }
    std::sort(around.begin(), around.end());
    for (const auto& [_, w] : around) emb.rotation[v].push_back(w);
  }
  return emb;
}

std::vector<VertexId> outer_walk(const std::vector<VertexId>& upper, const std::vector<VertexId>& lower) {
  std::vector<VertexId> walk = upper;
  for (std::size_t i = lower.size() - 2; i >= 1; --i) walk.push_back(lower[i]);
  return walk;
}

FragmentChart chart_from_template(const Template& tpl, ChartKind kind, int n) {
  FragmentChart chart;
  chart.kind = kind;
  chart.n = n;
  for (const auto& v : tpl.vertices) chart.graph.add_vertex(v);
  for (const auto& [a, b] : tpl.edges) chart.graph.add_edge(a, b);
  for (const auto& v : tpl.upper) chart.upper_path.push_back(chart.graph.id(v));
  for (const auto& v : tpl.lower) chart.lower_path.push_back(chart.graph.id(v));
  chart.endvertices = {chart.upper_path.front(), chart.upper_path.back()};
  chart.embedding = rotation_from_layout(chart.graph, tpl.pos, chart.upper_path, chart.lower_path,
                                         std::nullopt, std::nullopt);
  chart.embedding.outer_face = outer_walk(chart.upper_path, chart.lower_path);
  FragmentCopy whole;
  whole.id = to_string(kind);
  whole.type = kind == ChartKind::I || kind == ChartKind::A ? 'A' : 'B';
  whole.index = 0;
  whole.first = chart.endvertices.first;
  whole.last = chart.endvertices.second;
  for (std::size_t v = 0; v < chart.graph.num_vertices(); ++v)
    whole.vertices.push_back(static_cast<VertexId>(v));
  for (std::size_t e = 0; e < chart.graph.num_edges(); ++e) whole.edges.push_back(static_cast<int>(e));
  chart.copies.push_back(std::move(whole));
  return chart;
}

}  // namespace

VertexId FragmentChart::resolve(std::string_view name) const { return graph.id(canonical(name)); }

std::string FragmentChart::canonical(std::string_view name) const {
  if (auto it = aliases.find(std::string(name)); it != aliases.end()) return it->second;
  return std::string(name);
}

std::map<std::string, std::vector<VertexId>> FragmentChart::fragment_spans() const {
  std::map<std::string, std::vector<VertexId>> spans;
  for (const auto& c : copies) spans[c.id] = c.vertices;
  return spans;
}

const FragmentCopy& FragmentChart::copy(std::string_view id) const {
  for (const auto& c : copies)
    if (c.id == id) return c;
  throw Error("no fragment copy '" + std::string(id) + "'");
}

Graph FragmentChart::gminus() const {
  if (kind != ChartKind::G) return graph;
  return delete_elements(graph, {graph.label(*s), graph.label(*t)});
}

VertexId FragmentChart::left_end(int i) const {
  if (!is_chain()) throw Error("left_end needs a chain chart");
  if (i < 1) return graph.id("J0");
  if (i > a_count - 1) return graph.id("J" + std::to_string(a_count));
  return graph.id("L" + std::to_string(i));
}

VertexId FragmentChart::right_end(int i) const {
  if (!is_chain()) throw Error("right_end needs a chain chart");
  if (i < 1) return graph.id("J0");
  if (i > a_count - 1) return graph.id("J" + std::to_string(a_count));
  return graph.id("J" + std::to_string(i));
}

FragmentChart gadget_I() { return chart_from_template(template_I(), ChartKind::I, 0); }

FragmentChart fragment_A() { return chart_from_template(template_A(), ChartKind::A, 0); }

FragmentChart fragment_C(int n) {
  if (n < 1) throw Error("fragment C_n needs n >= 1");
  return chart_from_template(template_C(n), ChartKind::C, n);
}

FragmentChart fragment_D(int n) {
  if (n < 1) throw Error("fragment D_n needs n >= 1");
  return chart_from_template(template_D(n), ChartKind::D, n);
}

FragmentChart fragment_B(FragmentType type, int n) {
  return type == FragmentType::C ? fragment_C(n) : fragment_D(n);
}

namespace {

struct ChainBuild {
  FragmentChart chart;
  std::vector<Point> pos;
};

ChainBuild build_chain_layout(FragmentType type, int n, int a_count) {
  if (n < 1) throw Error("chain needs n >= 1");
  if (a_count < 1) throw Error("chain needs at least one copy of A");
  const Template a_tpl = template_A();
  const Template b_tpl = template_B(type, n);

  ChainBuild out;
  FragmentChart& chart = out.chart;
  chart.kind = ChartKind::Gminus;
  chart.n = n;
  chart.base = type;
  chart.a_count = a_count;

  double offset = 0;
  auto place = [&](const Template& tpl, char tag, int i, const std::map<std::string, std::string>& joins) {
    const std::string prefix = std::string(1, tag) + std::to_string(i) + ":";
    auto name = [&](const std::string& local) {
      if (auto it = joins.find(local); it != joins.end()) return it->second;
      return prefix + local;
    };
    for (const auto& [local, canon] : joins) chart.aliases[prefix + local] = canon;
    FragmentCopy copy;
    copy.id = std::string(1, tag) + std::to_string(i);
    copy.type = tag;
    copy.index = i;
    for (std::size_t k = 0; k < tpl.vertices.size(); ++k) {
      const auto label = name(tpl.vertices[k]);
      const bool fresh = !chart.graph.contains(label);
      const auto v = chart.graph.ensure_vertex(label);
      if (fresh) out.pos.push_back({tpl.pos[k].x + offset, tpl.pos[k].y});
      copy.vertices.push_back(v);
    }
    std::sort(copy.vertices.begin(), copy.vertices.end());
    for (const auto& [a, b] : tpl.edges) copy.edges.push_back(chart.graph.add_edge(name(a), name(b)));
    copy.first = chart.graph.id(name(tpl.upper.front()));
    copy.last = chart.graph.id(name(tpl.upper.back()));
    auto extend = [&](std::vector<VertexId>& path, const std::vector<std::string>& local) {
      for (const auto& l : local) {
        const auto v = chart.graph.id(name(l));
        if (path.empty() || path.back() != v) path.push_back(v);
      }
    };
    extend(chart.upper_path, tpl.upper);
    extend(chart.lower_path, tpl.lower);
    chart.copies.push_back(std::move(copy));
    offset += tpl.width;
  };

  const auto J = [](int i) { return "J" + std::to_string(i); };
  const auto L = [](int i) { return "L" + std::to_string(i); };
  for (int i = 1; i <= a_count; ++i) {
    place(a_tpl, 'A', i, {{"u1", J(i - 1)}, {"u3", i < a_count ? L(i) : J(a_count)}});
    if (i < a_count) place(b_tpl, 'B', i, {{"l", L(i)}, {"r", J(i)}});
  }
  chart.junctions.push_back(chart.graph.id(J(0)));
  for (int i = 1; i < a_count; ++i) {
    chart.junctions.push_back(chart.graph.id(L(i)));
    chart.junctions.push_back(chart.graph.id(J(i)));
  }
  chart.junctions.push_back(chart.graph.id(J(a_count)));
  for (int i = 1; i <= a_count; ++i)
    chart.u2_set.push_back(chart.graph.id("A" + std::to_string(i) + ":u2"));
  chart.endvertices = {chart.graph.id(J(0)), chart.graph.id(J(a_count))};
  chart.embedding = rotation_from_layout(chart.graph, out.pos, chart.upper_path, chart.lower_path,
                                         std::nullopt, std::nullopt);
  chart.embedding.outer_face = outer_walk(chart.upper_path, chart.lower_path);
  return out;
}

}  // namespace

FragmentChart build_chain_with(FragmentType type, int n, int a_count) {
  return build_chain_layout(type, n, a_count).chart;
}

FragmentChart build_chain(FragmentType type, int n) { return build_chain_with(type, n, 8); }

FragmentChart build_G_with(FragmentType type, int n, int a_count) {
  auto [chart, pos] = build_chain_layout(type, n, a_count);
  chart.kind = ChartKind::G;
  const auto s = chart.graph.add_vertex("s");
  const auto t = chart.graph.add_vertex("t");
  for (auto v : chart.upper_path) chart.graph.add_edge(s, v);
  for (auto v : chart.lower_path) chart.graph.add_edge(t, v);
  chart.s = s;
  chart.t = t;
  pos.resize(chart.graph.num_vertices());
  chart.embedding = rotation_from_layout(chart.graph, pos, chart.upper_path, chart.lower_path, s, t);
  chart.embedding.outer_face = {s, chart.endvertices.first, t, chart.endvertices.second};
  return chart;
}

FragmentChart build_G(FragmentType type, int n) { return build_G_with(type, n, 8); }

std::vector<LabelPair> map_into_copy(const FragmentChart& chain, int i, char type,
                                     const std::vector<LabelPair>& local_edges) {
  const std::string prefix = std::string(1, type) + std::to_string(i) + ":";
  std::vector<LabelPair> out;
  out.reserve(local_edges.size());
  for (const auto& [a, b] : local_edges)
    out.emplace_back(chain.canonical(prefix + a), chain.canonical(prefix + b));
  return out;
}

std::vector<LabelPair> gc_formula_apex_edges(int n) {
  const std::string w_last = "w" + std::to_string(n + 1);
  // l^i = L{i}, r^i = J{i}.
  return {{"s", "L1"},           {"s", "B1:w1"}, {"t", "L3"}, {"s", "B3:w1"},
          {"t", "B5:" + w_last}, {"s", "J5"},    {"t", "B7:" + w_last}, {"t", "J5"}};
}

std::vector<LabelPair> gc_formula_chain_edges(const FragmentChart& g, const Graph& kA) {
  if (!g.is_chain() || g.base != FragmentType::C || g.a_count != 8)
    throw Error("the displayed cactus lives on the standard G(C_n)");
  const int n = g.n;
  const std::string w_last = "w" + std::to_string(n + 1);
  const auto local_b = edge_label_list(fragment_C(n).graph);
  const auto local_a = edge_label_list(kA);
  auto without = [&](std::set<LabelPair> drop) {
    std::vector<LabelPair> keep;
    for (auto [a, b] : local_b) {
      if (drop.contains({a, b}) || drop.contains({b, a})) continue;
      keep.emplace_back(a, b);
    }
    return keep;
  };
  std::vector<LabelPair> out;
  for (int i = 1; i <= 8; ++i) {
    auto mapped = map_into_copy(g, i, 'A', local_a);
    out.insert(out.end(), mapped.begin(), mapped.end());
  }
  for (int i = 1; i <= 7; ++i) {
    std::vector<LabelPair> kept;
    if (i == 1 || i == 3)
      kept = without({{"l", "w1"}});
    else if (i == 5 || i == 7)
      kept = without({{w_last, "r"}});
    else
      kept = without({{"l", "v1"}, {w_last, "r"}});
    auto mapped = map_into_copy(g, i, 'B', kept);
    out.insert(out.end(), mapped.begin(), mapped.end());
  }
  return out;
}

Graph certificate_cactus_GC(const FragmentChart& g, const Graph& kA,
                            const std::vector<LabelPair>& apex_edges) {
  auto edges = gc_formula_chain_edges(g, kA);
  edges.insert(edges.end(), apex_edges.begin(), apex_edges.end());
  for (const auto& [a, b] : edges)
    if (!g.graph.has_edge(a, b))
      throw Error("formula edge '" + a + "'-'" + b + "' is not an edge of G(C_" + std::to_string(g.n) + ")");
  return spanning_subgraph(g.graph, edges);
}

Graph adjusted_cactus_GC(const FragmentChart& g, const Graph& kA) {
  auto displayed = gc_formula_chain_edges(g, kA);
  const std::string w_last = "w" + std::to_string(g.n + 1);
  // Swap the B^7 deletion w_{n+1}r for lv1.
  const auto b = [&](int i, const std::string& local) { return g.canonical("B" + std::to_string(i) + ":" + local); };
  const auto b7 = [&](const std::string& local) { return b(7, local); };
  const LabelPair dropped{b7("l"), b7("v1")};
  std::vector<LabelPair> edges;
  for (const auto& e : displayed)
    if (e != dropped && LabelPair{e.second, e.first} != dropped) edges.push_back(e);
  edges.emplace_back(b7(w_last), b7("r"));
  const std::vector<LabelPair> apex{{"s", b(1, "l")},    {"s", b(1, "w1")}, {"t", b(3, "l")},
                                    {"s", b(3, "w1")},   {"s", b(5, w_last)}, {"t", b(5, "r")},
                                    {"t", b(7, "l")},    {"t", b(7, "v1")}};
  edges.insert(edges.end(), apex.begin(), apex.end());
  for (const auto& [x, y] : edges)
    if (!g.graph.has_edge(x, y)) throw Error("adjusted cactus edge '" + x + "'-'" + y + "' is not an edge");
  return spanning_subgraph(g.graph, edges);
}

Graph certificate_cactus_GC(int n, const Graph& kA) {
  return certificate_cactus_GC(build_G(FragmentType::C, n), kA, gc_formula_apex_edges(n));
}

nlohmann::json chart_to_json(const FragmentChart& chart) {
  const auto& g = chart.graph;
  auto labels = [&](const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.label(v));
    return out;
  };
  nlohmann::json j;
  j["kind"] = to_string(chart.kind);
  if (chart.n > 0) j["n"] = chart.n;
  if (chart.base) j["base"] = to_string(*chart.base);
  j["graph"] = graph_to_json(g);
  j["endvertices"] = {g.label(chart.endvertices.first), g.label(chart.endvertices.second)};
  j["upper_path"] = labels(chart.upper_path);
  j["lower_path"] = labels(chart.lower_path);
  if (!chart.junctions.empty()) j["junctions"] = labels(chart.junctions);
  if (!chart.aliases.empty()) j["aliases"] = chart.aliases;
  if (!chart.u2_set.empty()) j["u2_set"] = labels(chart.u2_set);
  if (!chart.copies.empty()) {
    auto copies = nlohmann::json::array();
    for (const auto& c : chart.copies) copies.push_back({{"id", c.id}, {"vertices", labels(c.vertices)}});
    j["copies"] = std::move(copies);
  }
  if (chart.s) j["s"] = g.label(*chart.s);
  if (chart.t) j["t"] = g.label(*chart.t);
  if (!chart.embedding.rotation.empty()) j["embedding"] = embedding_to_json(g, chart.embedding);
  return j;
}

std::string chart_to_dot(const FragmentChart& chart, const std::vector<LabelPair>& highlight) {
  DotStyle style;
  style.upper_path = chart.upper_path;
  style.lower_path = chart.lower_path;
  if (chart.s) style.apexes.push_back(*chart.s);
  if (chart.t) style.apexes.push_back(*chart.t);
  style.highlight_edges = highlight;
  return graph_to_dot(chart.graph, style);
}

}  // namespace cactuslab
