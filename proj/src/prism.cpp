#include "cactuslab/prism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cactuslab/blocks.hpp"
#include "cactuslab/cactus.hpp"
#include "cactuslab/verify.hpp"

namespace cactuslab {

std::string prism_label(std::string_view base, Side side) {
  return std::string(base) + (side == Side::alpha ? "@a" : "@b");
}

PrismVertex parse_prism_label(std::string_view label) {
  if (label.size() < 3 || label[label.size() - 2] != '@' ||
      (label.back() != 'a' && label.back() != 'b'))
    throw Error("'" + std::string(label) + "' is not a prism vertex label");
  return {std::string(label.substr(0, label.size() - 2)), label.back() == 'a' ? Side::alpha : Side::beta};
}

std::string flip_label(std::string_view label) {
  const auto p = parse_prism_label(label);
  return prism_label(p.base, p.side == Side::alpha ? Side::beta : Side::alpha);
}

Graph prism(const Graph& g) {
  Graph p;
  for (auto side : {Side::alpha, Side::beta})
    for (const auto& l : g.labels()) p.add_vertex(prism_label(l, side));
  for (auto side : {Side::alpha, Side::beta})
    for (const auto& [a, b] : edge_label_list(g)) p.add_edge(prism_label(a, side), prism_label(b, side));
  for (const auto& l : g.labels()) p.add_edge(prism_label(l, Side::alpha), prism_label(l, Side::beta));
  return p;
}

std::vector<LabelPair> reflect_edges(const std::vector<LabelPair>& edges) {
  std::vector<LabelPair> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) out.emplace_back(flip_label(a), flip_label(b));
  return out;
}

Graph reflect(const Graph& s) {
  Graph r;
  for (const auto& l : s.labels()) r.add_vertex(flip_label(l));
  for (const auto& [a, b] : reflect_edges(edge_label_list(s))) r.add_edge(a, b);
  return r;
}

std::vector<std::string> sequence_from_cycle_edges(const std::vector<LabelPair>& edges) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (adj.empty()) return {};
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2) throw Error("edge set is not 2-regular at '" + v + "'");
    std::sort(nb.begin(), nb.end());
  }
  std::vector<std::string> seq{adj.begin()->first};
  std::string prev = seq.front();
  std::string cur = adj.begin()->second.front();
  while (cur != seq.front()) {
    seq.push_back(cur);
    const auto& nb = adj.at(cur);
    const auto next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (seq.size() > adj.size()) throw Error("edge set is not a single cycle");
  }
  if (seq.size() != adj.size()) throw Error("edge set is not a single cycle");
  return seq;
}

std::vector<std::string> cactus_prism_hamilton(const Graph& q, const std::vector<std::string>& required) {
  if (q.num_edges() == 0) throw Error("the prism over a single vertex has no Hamilton cycle");
  const auto report = analyze_cactus(q);
  if (!report.is_cactus || !report.is_even || report.classification != Goodness::good)
    throw Error("cactus_prism_hamilton needs a good even cactus");
  for (const auto& l : required)
    if (report.block_degrees[static_cast<std::size_t>(q.id(l))] != 1)
      throw Error("required vertex '" + l + "' does not have block degree one");

  // One prism cycle per block through every vertical of the block, then the
  // shared vertical at each cut vertex is dropped from both cycles, which
  // splices them together.
  const auto bd = block_decomposition(q);
  std::map<LabelPair, int> count;
  auto add = [&](const std::string& a, const std::string& b) {
    count[a < b ? LabelPair{a, b} : LabelPair{b, a}] += 1;
  };
  for (std::size_t blk = 0; blk < bd.blocks.size(); ++blk) {
    std::vector<VertexId> cyc;
    if (bd.is_bridge(static_cast<int>(blk))) {
      const auto& e = q.edge(bd.blocks[blk].front());
      cyc = {e.u, e.v};
    } else {
      // Walk the cycle block in order.
      std::set<int> in_block(bd.blocks[blk].begin(), bd.blocks[blk].end());
      const auto start = bd.block_vertices[blk].front();
      cyc.push_back(start);
      VertexId prev = -1;
      VertexId cur = start;
      while (true) {
        VertexId next = -1;
        for (int e : q.incident_edges(cur)) {
          if (!in_block.contains(e)) continue;
          const auto w = q.edge(e).other(cur);
          if (w != prev) {
            next = w;
            break;
          }
        }
        if (next == start) break;
        prev = cur;
        cur = next;
        cyc.push_back(cur);
      }
    }
    // Zigzag: even positions go alpha->beta, odd positions beta->alpha.
    std::vector<std::string> seq;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& l = q.label(cyc[i]);
      if (i % 2 == 0) {
        seq.push_back(prism_label(l, Side::alpha));
        seq.push_back(prism_label(l, Side::beta));
      } else {
        seq.push_back(prism_label(l, Side::beta));
        seq.push_back(prism_label(l, Side::alpha));
      }
    }
    for (std::size_t i = 0; i < seq.size(); ++i) add(seq[i], seq[(i + 1) % seq.size()]);
  }
  std::vector<LabelPair> edges;
  for (const auto& [e, c] : count)
    if (c == 1) edges.push_back(e);
  auto seq = sequence_from_cycle_edges(edges);
  const Graph p = prism(q);
  if (!check_hamilton_cycle(p, seq).ok()) throw Error("internal: prism cycle failed verification");
  return seq;
}

PathSpec spec_L() {
  return {"L", {{"l@a", "l@b"}, {"r@a", "r@b"}}, 0, 0};
}

PathSpec spec_S(int w, int x) {
  return {"S",
          {{"l@a", "w" + std::to_string(w) + "@b"}, {"l@b", "r@b"}, {"r@a", "x" + std::to_string(x) + "@a"}},
          w,
          x};
}

PathSpec spec_S_tilde(int w, int x) {
  return {"S~",
          {{"l@a", "w" + std::to_string(w) + "@b"}, {"l@b", "r@b"}, {"r@a", "x" + std::to_string(x) + "@b"}},
          w,
          x};
}

PathSystemResult solve_path_system(const FragmentChart& chart, const PathSpec& spec, const Budget& budget) {
  const Graph p = prism(chart.graph);
  for (const auto& [a, b] : spec.pairs)
    for (const auto& x : {a, b})
      if (!p.contains(x)) throw Error("spec endpoint '" + x + "' is not a vertex of the fragment prism");
  PathSystemResult res;
  res.outcome = linear_forest(p, spec.pairs, budget);
  res.system.spec = spec;
  if (res.outcome.found()) res.system.edges = res.outcome.witness_edges;
  return res;
}

namespace {

/// Candidate (w, x) index pairs: the printed pair, single shifts (w first),
/// then everything else by distance.
std::vector<std::pair<int, int>> shifted_indices(int n, int w0, int x0) {
  std::vector<std::pair<int, int>> out{{w0, x0}, {w0 + 1, x0}, {w0 - 1, x0}, {w0, x0 - 1}, {w0, x0 + 1}};
  std::vector<std::pair<int, int>> rest;
  for (int w = 1; w <= n + 1; ++w)
    for (int x = n + 1; x <= 2 * n + 1; ++x) rest.emplace_back(w, x);
  std::stable_sort(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
    return std::abs(a.first - w0) + std::abs(a.second - x0) < std::abs(b.first - w0) + std::abs(b.second - x0);
  });
  out.insert(out.end(), rest.begin(), rest.end());
  std::vector<std::pair<int, int>> valid;
  std::set<std::pair<int, int>> seen;
  for (const auto& [w, x] : out)
    if (w >= 1 && w <= n + 1 && x >= n + 1 && x <= 2 * n + 1 && seen.insert({w, x}).second) valid.emplace_back(w, x);
  return valid;
}

PathSystem solve_s_type(const FragmentChart& d, bool tilde, const Budget& budget, std::vector<std::string>& notes) {
  const int n = d.n;
  const int w0 = n;
  const int x0 = tilde ? 2 * n : 2 * n + 1;
  const std::string name = tilde ? "S~" : "S";
  for (const auto& [w, x] : shifted_indices(n, w0, x0)) {
    const auto spec = tilde ? spec_S_tilde(w, x) : spec_S(w, x);
    auto res = solve_path_system(d, spec, budget);
    if (res.outcome.status == SearchStatus::timeout)
      throw Error("path system " + name + " of D_" + std::to_string(n) + " timed out");
    if (res.outcome.found()) {
      if (w == w0 && x == x0)
        notes.push_back(name + ": printed endpoints (w" + std::to_string(w) + ", x" + std::to_string(x) + ")");
      else
        notes.push_back(name + ": printed endpoints infeasible, shifted to (w" + std::to_string(w) + ", x" +
                        std::to_string(x) + ")");
      return res.system;
    }
  }
  throw Error("no path system " + name + " exists for D_" + std::to_string(n));
}

}  // namespace

StitchResult stitch_hamilton_GD(int n, const Graph& kA, const Budget& budget) {
  if (n < 1) throw Error("G(D_n) needs n >= 1");
  const auto g = build_G(FragmentType::D, n);
  const auto d = fragment_D(n);
  StitchResult out;
  out.n = n;
  out.prism_graph = prism(g.graph);

  const auto hA = cactus_prism_hamilton(kA, {"u1", "u3"});
  const auto hA_edges = cycle_edges(hA);

  auto lres = solve_path_system(d, spec_L(), budget);
  if (!lres.outcome.found())
    throw Error("path system L of D_" + std::to_string(n) + " " +
                (lres.outcome.status == SearchStatus::timeout ? "timed out" : "does not exist"));
  out.L = lres.system;
  out.notes.push_back("L: printed endpoints");
  out.S = solve_s_type(d, false, budget, out.notes);
  out.S_tilde = solve_s_type(d, true, budget, out.notes);

  auto to_global = [&](char type, int i, const std::string& prism_local) {
    const auto pv = parse_prism_label(prism_local);
    const auto base = g.canonical(std::string(1, type) + std::to_string(i) + ":" + pv.base);
    return prism_label(base, pv.side);
  };
  std::vector<LabelPair> edges;
  auto place = [&](char type, int i, const std::vector<LabelPair>& local, const std::set<std::string>& drop) {
    for (const auto& [a, b] : local) {
      auto ga = to_global(type, i, a);
      auto gb = to_global(type, i, b);
      const auto key = std::min(a, b) + "|" + std::max(a, b);
      if (drop.contains(key)) continue;
      edges.emplace_back(std::move(ga), std::move(gb));
    }
  };
  const std::string u1v = "u1@a|u1@b";
  const std::string u3v = "u3@a|u3@b";
  for (int i = 1; i <= 8; ++i) {
    std::set<std::string> drop;
    if (i > 1) drop.insert(u1v);
    if (i < 8) drop.insert(u3v);
    place('A', i, hA_edges, drop);
  }
  for (int i : {2, 4, 6}) place('B', i, out.L.edges, {});
  place('B', 1, out.S.edges, {});
  place('B', 3, out.S_tilde.edges, {});
  place('B', 5, reflect_edges(out.S.edges), {});
  place('B', 7, reflect_edges(out.S_tilde.edges), {});

  auto connect = [&](const std::string& apex, Side apex_side, char type, int i, const std::string& local) {
    edges.emplace_back(prism_label(apex, apex_side), to_global(type, i, local));
  };
  const std::string ws = "w" + std::to_string(out.S.spec.w_index);
  const std::string xs = "x" + std::to_string(out.S.spec.x_index);
  const std::string wt = "w" + std::to_string(out.S_tilde.spec.w_index);
  const std::string xt = "x" + std::to_string(out.S_tilde.spec.x_index);
  connect("s", Side::beta, 'B', 1, ws + "@b");
  connect("t", Side::alpha, 'B', 1, xs + "@a");
  connect("s", Side::beta, 'B', 3, wt + "@b");
  connect("t", Side::beta, 'B', 3, xt + "@b");
  connect("s", Side::alpha, 'B', 5, ws + "@a");
  connect("t", Side::beta, 'B', 5, xs + "@b");
  connect("s", Side::alpha, 'B', 7, wt + "@a");
  connect("t", Side::alpha, 'B', 7, xt + "@a");

  const auto check = check_hamilton_cycle_edges(out.prism_graph, edges);
  if (!check.ok())
    throw Error(std::string("stitched edge set is not a Hamilton cycle (") +
                (check.edges_in_graph ? "" : "foreign edge; ") + (check.spanning ? "" : "not spanning; ") +
                (check.two_regular ? "" : "not 2-regular; ") + (check.connected ? "" : "disconnected") + ")");
  out.cycle = sequence_from_cycle_edges(edges);
  return out;
}

}  // namespace cactuslab
