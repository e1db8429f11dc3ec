#include "cactuslab/cactus.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace cactuslab {

std::string to_string(Goodness g) {
  switch (g) {
    case Goodness::good: return "good";
    case Goodness::one_good: return "one_good";
    case Goodness::two_good: return "two_good";
    case Goodness::none: return "none";
  }
  return "?";
}

std::string to_string(DeletionCase c) {
  switch (c) {
    case DeletionCase::I: return "I";
    case DeletionCase::II: return "II";
    case DeletionCase::violated: return "violated";
  }
  return "?";
}

namespace {

struct CactusInfo {
  BlockDecomposition bd;
  std::vector<int> b;
  std::vector<char> bridge;                      // per edge
  std::vector<std::vector<VertexId>> bridge_adj;  // neighbors across edge blocks
  bool is_cactus = true;
  bool is_even = true;
};

CactusInfo cactus_info(const Graph& q) {
  CactusInfo info;
  info.bd = block_decomposition(q);
  info.b.resize(q.num_vertices());
  for (std::size_t v = 0; v < q.num_vertices(); ++v) info.b[v] = info.bd.block_degree(static_cast<VertexId>(v));
  info.bridge.assign(q.num_edges(), 0);
  info.bridge_adj.assign(q.num_vertices(), {});
  for (std::size_t blk = 0; blk < info.bd.blocks.size(); ++blk) {
    const int id = static_cast<int>(blk);
    if (info.bd.is_bridge(id)) {
      const int e = info.bd.blocks[blk].front();
      info.bridge[static_cast<std::size_t>(e)] = 1;
      const auto& ed = q.edge(e);
      info.bridge_adj[static_cast<std::size_t>(ed.u)].push_back(ed.v);
      info.bridge_adj[static_cast<std::size_t>(ed.v)].push_back(ed.u);
    } else if (info.bd.is_cycle(id)) {
      if (info.bd.blocks[blk].size() % 2 != 0) info.is_even = false;
    } else {
      info.is_cactus = false;
    }
  }
  if (!info.is_cactus) info.is_even = false;
  return info;
}

std::vector<VertexId> resolve_path(const Graph& q, const CactusInfo& info, const EdgePath& p) {
  if (p.vertices.empty()) throw Error("edge path is empty");
  std::vector<VertexId> ids;
  std::set<VertexId> seen;
  for (const auto& l : p.vertices) {
    const auto v = q.find(l);
    if (!v) throw Error("edge path vertex '" + l + "' is not in the cactus");
    if (!seen.insert(*v).second) throw Error("edge path repeats vertex '" + l + "'");
    ids.push_back(*v);
  }
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    const auto e = q.edge_id(ids[i], ids[i + 1]);
    if (!e || !info.bridge[static_cast<std::size_t>(*e)])
      throw Error("'" + p.vertices[i] + "'-'" + p.vertices[i + 1] + "' is not an edge block");
  }
  return ids;
}

std::vector<char> interior_mask(std::size_t n, const std::vector<VertexId>& path) {
  std::vector<char> mask(n, 0);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) mask[static_cast<std::size_t>(path[i])] = 1;
  return mask;
}

bool p_good_with(const std::vector<int>& b, const std::vector<char>& interior) {
  for (std::size_t v = 0; v < b.size(); ++v)
    if (b[v] > (interior[v] ? 3 : 2)) return false;
  return true;
}

bool p1p2_good_with(const std::vector<int>& b, const std::vector<char>& in1, const std::vector<char>& in2) {
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (in1[v] && in2[v]) {
      if (b[v] != 4) return false;
    } else if (in1[v] || in2[v]) {
      if (b[v] > 3) return false;
    } else if (b[v] > 2) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> labels_of(const Graph& q, const std::vector<VertexId>& path) {
  std::vector<std::string> out;
  out.reserve(path.size());
  for (auto v : path) out.push_back(q.label(v));
  return out;
}

/// Calls visit(path) for every edge path with at least two edges, once per
/// orientation.
template <typename Visit>
void for_each_long_edge_path(const Graph& q, const CactusInfo& info, Visit&& visit) {
  const std::size_t n = q.num_vertices();
  std::vector<VertexId> path;
  std::vector<char> on_path(n, 0);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Frame> stack{{static_cast<VertexId>(s), 0}};
    path.assign(1, static_cast<VertexId>(s));
    on_path[s] = 1;
    while (!stack.empty()) {
      auto& fr = stack.back();
      const auto& nb = info.bridge_adj[static_cast<std::size_t>(fr.v)];
      if (fr.next < nb.size()) {
        const auto w = nb[fr.next++];
        if (on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        stack.push_back({w, 0});
        if (path.size() >= 3) visit(path);
        continue;
      }
      on_path[static_cast<std::size_t>(fr.v)] = 0;
      path.pop_back();
      stack.pop_back();
    }
  }
}

std::optional<std::vector<std::string>> least_p_witness(const Graph& q, const CactusInfo& info) {
  const std::size_t n = q.num_vertices();
  int need = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (info.b[v] >= 4) return std::nullopt;
    if (info.b[v] == 3) ++need;
  }
  std::optional<std::vector<std::string>> best;
  for_each_long_edge_path(q, info, [&](const std::vector<VertexId>& path) {
    if (info.b[static_cast<std::size_t>(path.front())] > 2 || info.b[static_cast<std::size_t>(path.back())] > 2)
      return;
    if (q.label(path.back()) < q.label(path.front())) return;
    int covered = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (info.b[static_cast<std::size_t>(path[i])] == 3) ++covered;
    if (covered != need) return;
    auto seq = labels_of(q, path);
    if (!best || seq < *best) best = std::move(seq);
  });
  return best;
}

struct TightPath {
  std::vector<VertexId> ids;
  std::vector<std::string> labels;
  std::vector<char> members;
  std::vector<char> interior;
};

/// Edge paths whose first and last interior vertices have block degree at
/// least three. Any {P1, P2} witness of a cactus that is not 1-good can be
/// shrunk to a pair of such paths.
std::vector<TightPath> tight_paths(const Graph& q, const CactusInfo& info) {
  const std::size_t n = q.num_vertices();
  std::vector<VertexId> required;
  for (std::size_t v = 0; v < n; ++v)
    if (info.b[v] >= 3) required.push_back(static_cast<VertexId>(v));
  std::set<std::vector<std::string>> seen;
  std::vector<TightPath> out;
  for (auto r1 : required) {
    // Parent pointers in r1's bridge tree.
    std::vector<VertexId> parent(n, -2);
    std::vector<VertexId> order{r1};
    parent[static_cast<std::size_t>(r1)] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (auto w : info.bridge_adj[static_cast<std::size_t>(order[i])])
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = order[i];
          order.push_back(w);
        }
    for (auto r2 : required) {
      if (parent[static_cast<std::size_t>(r2)] == -2) continue;
      std::vector<VertexId> core;
      for (VertexId x = r2; x != -1; x = parent[static_cast<std::size_t>(x)]) core.push_back(x);
      std::reverse(core.begin(), core.end());  // r1 .. r2
      std::vector<char> in_core(n, 0);
      for (auto v : core) in_core[static_cast<std::size_t>(v)] = 1;
      for (auto x : info.bridge_adj[static_cast<std::size_t>(r1)]) {
        if (in_core[static_cast<std::size_t>(x)]) continue;
        for (auto y : info.bridge_adj[static_cast<std::size_t>(r2)]) {
          if (in_core[static_cast<std::size_t>(y)] || x == y) continue;
          TightPath tp;
          tp.ids.push_back(x);
          tp.ids.insert(tp.ids.end(), core.begin(), core.end());
          tp.ids.push_back(y);
          if (q.label(tp.ids.back()) < q.label(tp.ids.front())) std::reverse(tp.ids.begin(), tp.ids.end());
          tp.labels = labels_of(q, tp.ids);
          if (!seen.insert(tp.labels).second) continue;
          tp.members.assign(n, 0);
          for (auto v : tp.ids) tp.members[static_cast<std::size_t>(v)] = 1;
          tp.interior = interior_mask(n, tp.ids);
          out.push_back(std::move(tp));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.labels < b.labels; });
  return out;
}

std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> least_p1p2_witness(
    const Graph& q, const CactusInfo& info) {
  const std::size_t n = q.num_vertices();
  for (std::size_t v = 0; v < n; ++v)
    if (info.b[v] >= 5) return std::nullopt;
  const auto paths = tight_paths(q, info);
  // Sorted, so the first valid (i, j) with i <= j is lexicographically least.
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i; j < paths.size(); ++j) {
      int shared = 0;
      for (auto v : paths[j].ids) shared += paths[i].members[static_cast<std::size_t>(v)];
      if (shared > 1) continue;
      if (p1p2_good_with(info.b, paths[i].interior, paths[j].interior))
        return std::make_pair(paths[i].labels, paths[j].labels);
    }
  }
  return std::nullopt;
}

}  // namespace

CactusReport analyze_cactus(const Graph& q) {
  if (q.num_vertices() == 0) throw Error("cannot analyze an empty graph");
  if (!is_connected(q)) throw Error("cactus analysis needs a connected graph");
  const auto info = cactus_info(q);
  CactusReport report;
  report.is_cactus = info.is_cactus;
  report.is_even = info.is_even;
  report.block_degrees = info.b;
  for (std::size_t blk = 0; blk < info.bd.blocks.size(); ++blk) {
    if (info.bd.is_bridge(static_cast<int>(blk)))
      ++report.edge_blocks;
    else if (info.bd.is_cycle(static_cast<int>(blk)))
      ++report.cycle_blocks;
  }
  if (!info.is_cactus) return report;
  const int max_b = info.b.empty() ? 0 : *std::max_element(info.b.begin(), info.b.end());
  if (max_b <= 2) {
    report.classification = Goodness::good;
    return report;
  }
  if (auto p = least_p_witness(q, info)) {
    report.classification = Goodness::one_good;
    report.witness_paths.push_back(EdgePath{*p});
    return report;
  }
  if (auto pair = least_p1p2_witness(q, info)) {
    report.classification = Goodness::two_good;
    report.witness_paths.push_back(EdgePath{pair->first});
    report.witness_paths.push_back(EdgePath{pair->second});
  }
  return report;
}

bool is_p_good(const Graph& q, const EdgePath& p) {
  const auto info = cactus_info(q);
  if (!info.is_cactus) throw Error("P-goodness needs a cactus");
  const auto ids = resolve_path(q, info, p);
  return p_good_with(info.b, interior_mask(q.num_vertices(), ids));
}

bool is_p1p2_good(const Graph& q, const EdgePath& p1, const EdgePath& p2) {
  const auto info = cactus_info(q);
  if (!info.is_cactus) throw Error("{P1,P2}-goodness needs a cactus");
  const auto a = resolve_path(q, info, p1);
  const auto b = resolve_path(q, info, p2);
  int shared = 0;
  for (auto v : a) shared += static_cast<int>(std::count(b.begin(), b.end(), v));
  if (shared > 1) throw Error("paths share more than one vertex");
  const auto n = q.num_vertices();
  return p1p2_good_with(info.b, interior_mask(n, a), interior_mask(n, b));
}

std::optional<EdgePath> edge_path_between(const Graph& q, const std::string& x, const std::string& y) {
  const auto info = cactus_info(q);
  if (!info.is_cactus) throw Error("edge paths need a cactus");
  const auto from = q.id(x);
  const auto to = q.id(y);
  if (from == to) return std::nullopt;
  std::vector<VertexId> parent(q.num_vertices(), -2);
  parent[static_cast<std::size_t>(from)] = -1;
  std::vector<VertexId> queue{from};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto w : info.bridge_adj[static_cast<std::size_t>(queue[i])])
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = queue[i];
        queue.push_back(w);
      }
  if (parent[static_cast<std::size_t>(to)] == -2) return std::nullopt;
  std::vector<VertexId> path;
  for (VertexId v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return EdgePath{labels_of(q, path)};
}

std::vector<EdgePath> all_p_good_witnesses(const Graph& q) {
  const auto info = cactus_info(q);
  if (!info.is_cactus) throw Error("P-goodness needs a cactus");
  std::vector<EdgePath> out;
  for_each_long_edge_path(q, info, [&](const std::vector<VertexId>& path) {
    if (q.label(path.back()) < q.label(path.front())) return;
    if (p_good_with(info.b, interior_mask(q.num_vertices(), path))) out.push_back(EdgePath{labels_of(q, path)});
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
  return out;
}

DeletionReport classify_deletion(const Graph& k, const std::string& s, const std::string& t,
                                 bool max_degree_3) {
  if (s == t) throw Error("s and t must be distinct");
  const auto whole = analyze_cactus(k);
  if (!whole.is_cactus || whole.classification != Goodness::good)
    throw Error("classify_deletion needs a good cactus");
  const Graph rest = delete_elements(k, {s, t});

  DeletionReport report;
  report.lemma = max_degree_3 && k.max_degree() <= 3 ? 6 : 7;
  for (const auto& comp : connected_components(rest)) {
    DeletionComponent dc;
    dc.graph = induced_subgraph(rest, comp);
    dc.report = analyze_cactus(dc.graph);
    switch (dc.report.classification) {
      case Goodness::good: ++report.good_count; break;
      case Goodness::one_good: ++report.q1; break;
      case Goodness::two_good: ++report.q2; break;
      case Goodness::none: ++report.other_count; break;
    }
    report.components.push_back(std::move(dc));
  }
  const auto count = report.components.size();
  bool case_one = false;
  bool case_two = false;
  if (report.other_count == 0) {
    if (report.lemma == 6) {
      case_one = count <= 4 && report.q2 == 0 && report.q1 <= 2;
      case_two = count <= 3 && report.q2 == 1 && report.q1 == 0;
    } else {
      case_one = count <= 4 && report.q2 == 0;
      case_two = count <= 3 && report.q2 == 1;
    }
  }
  report.deletion_case = case_one ? DeletionCase::I : case_two ? DeletionCase::II : DeletionCase::violated;
  return report;
}

namespace {

struct IntervalTable {
  Graph gminus;
  int m = 0;  // last index (number of A copies)
  // members[a][b] over gminus ids, for a <= b
  std::vector<std::vector<std::vector<char>>> members;
};

std::vector<char> path_members(const Graph& gm, const BlockDecomposition& bd, VertexId u, VertexId v) {
  std::vector<char> mask(gm.num_vertices(), 0);
  mask[static_cast<std::size_t>(u)] = 1;
  for (int blk : block_path_blocks(gm, bd, u, v))
    for (auto x : bd.block_vertices[static_cast<std::size_t>(blk)]) mask[static_cast<std::size_t>(x)] = 1;
  return mask;
}

IntervalTable interval_table(const FragmentChart& chart, bool inner) {
  if (!chart.is_chain()) throw Error("bags need a chain chart (G or G^-)");
  IntervalTable tab;
  tab.gminus = chart.gminus();
  tab.m = chart.a_count;
  const auto bd = block_decomposition(tab.gminus);
  tab.members.assign(static_cast<std::size_t>(tab.m + 1), {});
  for (int a = 0; a <= tab.m; ++a) {
    tab.members[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(tab.m + 1));
    for (int b = a; b <= tab.m; ++b) {
      const auto from = inner ? chart.right_end(a) : chart.left_end(a);
      const auto to = inner ? chart.left_end(b) : chart.right_end(b);
      tab.members[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          path_members(tab.gminus, bd, tab.gminus.id(chart.graph.label(from)), tab.gminus.id(chart.graph.label(to)));
    }
  }
  return tab;
}

std::vector<std::string> mask_labels(const Graph& g, const std::vector<char>& mask) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) out.push_back(g.label(static_cast<VertexId>(v)));
  return out;
}

}  // namespace

std::vector<std::string> chain_interval_vertices(const FragmentChart& chart, int a, int b) {
  if (a > b) throw Error("interval needs a <= b");
  const auto tab = interval_table(chart, false);
  if (a < 0 || b > tab.m) throw Error("interval index out of range");
  return mask_labels(tab.gminus, tab.members[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

std::vector<std::string> chain_inner_interval_vertices(const FragmentChart& chart, int a, int b) {
  if (a > b) throw Error("interval needs a <= b");
  const auto tab = interval_table(chart, true);
  if (a < 0 || b > tab.m) throw Error("interval index out of range");
  return mask_labels(tab.gminus, tab.members[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

BagReport bags(const Graph& q, const FragmentChart& chart) {
  const auto tab = interval_table(chart, false);
  const Graph& gm = tab.gminus;
  std::vector<char> in_q(gm.num_vertices(), 0);
  for (const auto& l : q.labels()) {
    const auto v = gm.find(l);
    if (!v) throw Error("'" + l + "' is not a vertex of the chain");
    in_q[static_cast<std::size_t>(*v)] = 1;
  }
  for (std::size_t e = 0; e < q.num_edges(); ++e) {
    const auto [a, b] = q.edge_labels(static_cast<int>(e));
    if (!gm.has_edge(a, b)) throw Error("'" + a + "'-'" + b + "' is not an edge of the chain");
  }

  BagReport report;
  bool found = false;
  for (int width = 0; width <= tab.m && !found; ++width) {
    for (int a = 0; a + width <= tab.m && !found; ++a) {
      const auto& mask = tab.members[static_cast<std::size_t>(a)][static_cast<std::size_t>(a + width)];
      bool inside = true;
      for (std::size_t v = 0; v < mask.size() && inside; ++v)
        if (in_q[v] && !mask[v]) inside = false;
      if (inside) {
        report.interval = {a, a + width};
        found = true;
      }
    }
  }
  if (!found) throw Error("component is not contained in any chain interval");

  for (const auto& copy : chart.copies) {
    auto gm_id = [&](VertexId v) { return static_cast<std::size_t>(gm.id(chart.graph.label(v))); };
    if (!in_q[gm_id(copy.first)] || !in_q[gm_id(copy.last)]) continue;
    const bool partial = std::any_of(copy.vertices.begin(), copy.vertices.end(),
                                     [&](VertexId v) { return !in_q[gm_id(v)]; });
    if (partial) report.bags.push_back(copy.id);
  }
  return report;
}

std::vector<BagBoundCheck> check_bag_bounds(const Graph& k, const FragmentChart& chart) {
  if (chart.kind != ChartKind::G) throw Error("bag bounds need the apex graph G");
  const auto& s = chart.graph.label(*chart.s);
  const auto& t = chart.graph.label(*chart.t);
  const Graph rest = delete_elements(k, {s, t});
  const auto inner = interval_table(chart, true);
  std::vector<BagBoundCheck> out;
  for (const auto& comp : connected_components(rest)) {
    const Graph q = induced_subgraph(rest, comp);
    const auto report = analyze_cactus(q);
    const auto bag = bags(q, chart);
    BagBoundCheck check;
    check.component = q.label(0);
    check.goodness = report.classification;
    check.interval = bag.interval;
    check.bag_count = static_cast<int>(bag.bags.size());
    const int span = bag.interval.b - bag.interval.a;
    switch (report.classification) {
      case Goodness::good: check.lower_bound = span - 1; break;
      case Goodness::one_good: check.lower_bound = span - 2; break;
      case Goodness::two_good: check.lower_bound = span - 3; break;
      case Goodness::none: check.lower_bound = span; break;
    }
    check.bound_holds = report.classification != Goodness::none && check.bag_count >= check.lower_bound;
    if (report.classification == Goodness::one_good && check.bag_count == 0 && span == 2) {
      const auto& mask = inner.members[static_cast<std::size_t>(bag.interval.a)][static_cast<std::size_t>(bag.interval.b)];
      for (const auto& p : all_p_good_witnesses(q)) {
        for (const auto& l : p.vertices)
          if (!mask[static_cast<std::size_t>(inner.gminus.id(l))]) check.inner_path_clause_holds = false;
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace cactuslab
