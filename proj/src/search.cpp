#include "cactuslab/search.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <set>

#include "cactuslab/cactus.hpp"
#include "cactuslab/verify.hpp"

namespace cactuslab {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "FOUND";
    case SearchStatus::none: return "NONE";
    case SearchStatus::timeout: return "TIMEOUT";
  }
  return "?";
}

std::string to_string(CactusGoodness g) {
  switch (g) {
    case CactusGoodness::any: return "any";
    case CactusGoodness::good: return "good";
    case CactusGoodness::p_good: return "p_good";
    case CactusGoodness::p1p2_good: return "p1p2_good";
    case CactusGoodness::off_path_good: return "off_path_good";
  }
  return "?";
}

Budget Budget::seconds(double s) {
  Budget b;
  b.wall = std::chrono::milliseconds(static_cast<long long>(s * 1000.0));
  return b;
}

Budget Budget::parse(const std::string& text) {
  if (text.empty()) throw Error("empty budget");
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error("bad budget '" + text + "'");
  }
  const std::string unit = text.substr(used);
  double scale = 1;
  if (unit.empty() || unit == "s")
    scale = 1;
  else if (unit == "m")
    scale = 60;
  else if (unit == "h")
    scale = 3600;
  else if (unit == "ms")
    scale = 0.001;
  else
    throw Error("bad budget unit in '" + text + "'");
  if (value < 0) throw Error("budget must be non-negative");
  return seconds(value * scale);
}

namespace {

using Clock = std::chrono::steady_clock;

class Meter {
 public:
  explicit Meter(const Budget& b) : budget_(b), start_(Clock::now()) {}

  /// Counts a node; false once the budget is spent.
  bool tick() {
    if (expired_) return false;
    ++nodes_;
    if (budget_.nodes && nodes_ > *budget_.nodes) expired_ = true;
    if (budget_.wall && (nodes_ & 255) == 0 && Clock::now() - start_ > *budget_.wall) expired_ = true;
    return !expired_;
  }
  bool expired() const { return expired_; }
  std::uint64_t nodes() const { return nodes_; }

  void finish(SearchOutcome& out, bool found) const {
    out.nodes_explored = nodes_;
    out.elapsed = Clock::now() - start_;
    if (found)
      out.status = SearchStatus::found;
    else if (expired_)
      out.status = SearchStatus::timeout;
    else
      out.status = SearchStatus::none;
    out.exhaustive = out.status == SearchStatus::none;
  }

 private:
  Budget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

std::vector<std::string> labels_of(const Graph& g, const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto v : ids) out.push_back(g.label(v));
  return out;
}

// ---------------------------------------------------------------- Hamilton

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, Meter& meter) : g_(g), meter_(meter), visited_(g.num_vertices(), 0) {}

  bool run() {
    const auto n = g_.num_vertices();
    if (n < 3 || !is_connected(g_)) return false;
    for (std::size_t v = 0; v < n; ++v)
      if (g_.degree(static_cast<VertexId>(v)) < 2) return false;
    start_ = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (g_.degree(static_cast<VertexId>(v)) < g_.degree(start_)) start_ = static_cast<VertexId>(v);
    visited_[static_cast<std::size_t>(start_)] = 1;
    path_.push_back(start_);
    return extend(start_);
  }

  const std::vector<VertexId>& path() const { return path_; }

 private:
  int available(VertexId w, VertexId end) const {
    int c = 0;
    for (auto x : g_.neighbors(w))
      if (!visited_[static_cast<std::size_t>(x)] || x == end || x == start_) ++c;
    return c;
  }

  bool feasible(VertexId end) const {
    const auto n = g_.num_vertices();
    VertexId seed = -1;
    std::size_t unvisited = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (visited_[w]) continue;
      ++unvisited;
      if (seed < 0) seed = static_cast<VertexId>(w);
      if (available(static_cast<VertexId>(w), end) < 2) return false;
    }
    if (seed < 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{seed};
    seen[static_cast<std::size_t>(seed)] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : g_.neighbors(v))
        if (!visited_[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == unvisited;
  }

  bool extend(VertexId end) {
    if (path_.size() == g_.num_vertices()) return g_.has_edge(end, start_);
    if (!meter_.tick()) return false;
    if (!feasible(end)) return false;
    std::vector<std::pair<int, VertexId>> next;
    for (auto w : g_.neighbors(end))
      if (!visited_[static_cast<std::size_t>(w)]) next.emplace_back(available(w, end), w);
    std::sort(next.begin(), next.end());
    for (const auto& [_, w] : next) {
      visited_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      if (extend(w)) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(w)] = 0;
      if (meter_.expired()) return false;
    }
    return false;
  }

  const Graph& g_;
  Meter& meter_;
  std::vector<char> visited_;
  std::vector<VertexId> path_;
  VertexId start_ = 0;
};

std::string fresh_label(const Graph& g) {
  std::string label = "#aux";
  while (g.contains(label)) label += "#";
  return label;
}

}  // namespace

SearchOutcome hamilton_cycle(const Graph& g, const Budget& budget) {
  Meter meter(budget);
  HamiltonSearch search(g, meter);
  SearchOutcome out;
  const bool found = search.run();
  if (found) {
    out.witness_sequence = labels_of(g, search.path());
    out.witness_edges = cycle_edges(out.witness_sequence);
    if (!check_hamilton_cycle(g, out.witness_sequence).ok()) throw Error("internal: Hamilton cycle failed verification");
  }
  meter.finish(out, found);
  return out;
}

SearchOutcome hamilton_path(const Graph& g, std::optional<std::pair<std::string, std::string>> endpoints,
                            const Budget& budget) {
  if (endpoints) {
    if (endpoints->first == endpoints->second) throw Error("Hamilton path endpoints must be distinct");
    g.id(endpoints->first);
    g.id(endpoints->second);
  }
  SearchOutcome out;
  if (g.num_vertices() == 1 && !endpoints) {
    Meter meter(budget);
    out.witness_sequence = {g.label(0)};
    meter.finish(out, true);
    return out;
  }
  Graph aux = g;
  const auto z = aux.add_vertex(fresh_label(g));
  if (endpoints) {
    aux.add_edge(z, aux.id(endpoints->first));
    aux.add_edge(z, aux.id(endpoints->second));
  } else {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) aux.add_edge(z, static_cast<VertexId>(v));
  }
  Meter meter(budget);
  HamiltonSearch search(aux, meter);
  const bool found = search.run();
  if (found) {
    auto cyc = search.path();
    const auto at = std::find(cyc.begin(), cyc.end(), z);
    std::rotate(cyc.begin(), at, cyc.end());
    cyc.erase(cyc.begin());
    if (endpoints && g.label(cyc.front()) != endpoints->first) std::reverse(cyc.begin(), cyc.end());
    out.witness_sequence = labels_of(g, cyc);
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
      out.witness_edges.emplace_back(g.label(cyc[i]), g.label(cyc[i + 1]));
    if (!is_hamilton_path(g, out.witness_sequence, endpoints)) throw Error("internal: Hamilton path failed verification");
  }
  meter.finish(out, found);
  return out;
}

// ------------------------------------------------------------------ cactus

namespace {

constexpr int kUnlimited = INT_MAX / 4;

struct ResolvedConstraints {
  std::vector<int> cap;            // block degree cap per vertex
  std::vector<char> needs_one;     // required block degree exactly one
  int max_degree = kUnlimited;
  std::vector<std::pair<VertexId, VertexId>> paths;
  CactusGoodness goodness = CactusGoodness::good;
  bool even = true;
  std::vector<int> required;
  std::vector<char> forbidden;     // per edge
};

ResolvedConstraints resolve(const Graph& g, const CactusConstraints& c) {
  ResolvedConstraints r;
  const auto n = g.num_vertices();
  r.goodness = c.goodness;
  r.even = c.even;
  auto vertex = [&](const std::string& l) {
    const auto v = g.find(l);
    if (!v) throw Error("constraint vertex '" + l + "' is not in the graph");
    return *v;
  };
  const bool wants_path = c.goodness == CactusGoodness::p_good || c.goodness == CactusGoodness::off_path_good ||
                          c.goodness == CactusGoodness::p1p2_good;
  if (wants_path && !c.required_edge_path_endpoints)
    throw Error(to_string(c.goodness) + " needs edge path endpoints");
  if (c.goodness == CactusGoodness::p1p2_good && !c.second_edge_path_endpoints)
    throw Error("p1p2_good needs two pairs of edge path endpoints");
  if (!wants_path && (c.required_edge_path_endpoints || c.second_edge_path_endpoints))
    throw Error("edge path endpoints given for goodness '" + to_string(c.goodness) + "'");
  if (c.goodness != CactusGoodness::p1p2_good && c.second_edge_path_endpoints)
    throw Error("a second edge path needs p1p2_good");
  for (const auto& p : {c.required_edge_path_endpoints, c.second_edge_path_endpoints}) {
    if (!p) continue;
    if (p->first == p->second) throw Error("edge path endpoints must be distinct");
    r.paths.emplace_back(vertex(p->first), vertex(p->second));
  }
  if (c.max_degree) {
    if (*c.max_degree < 1) throw Error("max_degree must be positive");
    r.max_degree = *c.max_degree;
  }

  int base = 2;
  switch (c.goodness) {
    case CactusGoodness::any: base = kUnlimited; break;
    case CactusGoodness::good: base = 2; break;
    case CactusGoodness::p_good: base = 3; break;
    case CactusGoodness::p1p2_good: base = 4; break;
    case CactusGoodness::off_path_good: base = kUnlimited; break;
  }
  r.cap.assign(n, base);
  if (c.goodness == CactusGoodness::p_good || c.goodness == CactusGoodness::off_path_good) {
    r.cap[static_cast<std::size_t>(r.paths[0].first)] = 2;
    r.cap[static_cast<std::size_t>(r.paths[0].second)] = 2;
  }
  r.needs_one.assign(n, 0);
  for (const auto& l : c.required_block_degree_1) {
    const auto v = vertex(l);
    r.needs_one[static_cast<std::size_t>(v)] = 1;
    r.cap[static_cast<std::size_t>(v)] = 1;
  }

  r.forbidden.assign(g.num_edges(), 0);
  auto edge = [&](const LabelPair& e) {
    const auto id = g.edge_id(vertex(e.first), vertex(e.second));
    if (!id) throw Error("constraint edge '" + e.first + "'-'" + e.second + "' is not in the graph");
    return *id;
  };
  for (const auto& e : c.forbidden_edges) r.forbidden[static_cast<std::size_t>(edge(e))] = 1;
  std::set<int> seen;
  for (const auto& e : c.required_edges) {
    const auto id = edge(e);
    if (r.forbidden[static_cast<std::size_t>(id)])
      throw Error("edge '" + e.first + "'-'" + e.second + "' is both required and forbidden");
    if (seen.insert(id).second) r.required.push_back(id);
  }
  return r;
}

class CactusSearch {
 public:
  CactusSearch(const Graph& g, ResolvedConstraints rc, Meter& meter)
      : g_(g), rc_(std::move(rc)), meter_(meter) {
    const auto n = g.num_vertices();
    const auto m = g.num_edges();
    uf_parent_.resize(n);
    for (std::size_t v = 0; v < n; ++v) uf_parent_[v] = static_cast<VertexId>(v);
    uf_size_.assign(n, 1);
    components_ = n;
    status_.assign(m, 0);
    bridge_.assign(m, 0);
    bridges_.assign(n, 0);
    cycles_.assign(n, 0);
    deg_.assign(n, 0);
    undecided_.assign(n, 0);
    inc_.assign(n, {});
    for (std::size_t e = 0; e < m; ++e) {
      ++undecided_[static_cast<std::size_t>(g.edge(static_cast<int>(e)).u)];
      ++undecided_[static_cast<std::size_t>(g.edge(static_cast<int>(e)).v)];
    }
    order_.resize(m);
    for (std::size_t e = 0; e < m; ++e) order_[e] = static_cast<int>(e);
    std::vector<std::pair<std::size_t, LabelPair>> key(m);
    for (std::size_t e = 0; e < m; ++e) {
      const auto& ed = g.edge(static_cast<int>(e));
      key[e] = {std::min(g.degree(ed.u), g.degree(ed.v)), g.edge_labels(static_cast<int>(e))};
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
    });
  }

  /// Applies required and forbidden edges. False when already infeasible.
  bool prepare() {
    for (std::size_t e = 0; e < rc_.forbidden.size(); ++e)
      if (rc_.forbidden[e]) exclude(static_cast<int>(e));
    for (int e : rc_.required)
      if (!include(e)) return false;
    return support_connected() && paths_feasible();
  }

  /// Depth-first search. The callback receives each solution and returns
  /// true to stop. In `first_only` mode a connected partial solution that
  /// already satisfies everything is reported with the remaining edges
  /// excluded.
  bool run(const std::function<bool(const std::vector<int>&)>& on_solution, bool first_only) {
    on_solution_ = &on_solution;
    first_only_ = first_only;
    return dfs();
  }

 private:
  struct Record {
    int edge = -1;
    bool merged = false;       // union-find merge happened
    VertexId absorbed = -1;    // root that was attached
    std::vector<int> converted;
  };

  VertexId find(VertexId v) const {
    while (uf_parent_[static_cast<std::size_t>(v)] != v) v = uf_parent_[static_cast<std::size_t>(v)];
    return v;
  }

  int lower_bound(VertexId v) const {
    const auto i = static_cast<std::size_t>(v);
    return cycles_[i] + (bridges_[i] + 1) / 2;
  }

  void exclude(int e) {
    status_[static_cast<std::size_t>(e)] = 2;
    const auto& ed = g_.edge(e);
    --undecided_[static_cast<std::size_t>(ed.u)];
    --undecided_[static_cast<std::size_t>(ed.v)];
  }

  void unexclude(int e) {
    status_[static_cast<std::size_t>(e)] = 0;
    const auto& ed = g_.edge(e);
    ++undecided_[static_cast<std::size_t>(ed.u)];
    ++undecided_[static_cast<std::size_t>(ed.v)];
  }

  /// Edges of the included bridge path from u to v, or empty.
  std::vector<int> bridge_path(VertexId u, VertexId v) {
    const auto n = g_.num_vertices();
    if (via_.size() != n) via_.assign(n, -2);
    std::vector<VertexId> touched{u};
    via_[static_cast<std::size_t>(u)] = -1;
    bool hit = false;
    for (std::size_t i = 0; i < touched.size() && !hit; ++i) {
      const auto x = touched[i];
      for (int e : inc_[static_cast<std::size_t>(x)]) {
        if (!bridge_[static_cast<std::size_t>(e)]) continue;
        const auto y = g_.edge(e).other(x);
        if (via_[static_cast<std::size_t>(y)] != -2) continue;
        via_[static_cast<std::size_t>(y)] = e;
        touched.push_back(y);
        if (y == v) {
          hit = true;
          break;
        }
      }
    }
    std::vector<int> path;
    if (hit) {
      for (VertexId x = v; x != u;) {
        const int e = via_[static_cast<std::size_t>(x)];
        path.push_back(e);
        x = g_.edge(e).other(x);
      }
    }
    for (auto x : touched) via_[static_cast<std::size_t>(x)] = -2;
    return path;
  }

  bool include(int e) {
    const auto& ed = g_.edge(e);
    const auto u = ed.u;
    const auto v = ed.v;
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    if (deg_[ui] + 1 > rc_.max_degree || deg_[vi] + 1 > rc_.max_degree) return false;
    Record rec;
    rec.edge = e;
    const auto ru = find(u);
    const auto rv = find(v);
    if (ru != rv) {
      if (lower_bound_after_bridge(u) > rc_.cap[ui] || lower_bound_after_bridge(v) > rc_.cap[vi]) return false;
      auto big = ru;
      auto small = rv;
      if (uf_size_[static_cast<std::size_t>(big)] < uf_size_[static_cast<std::size_t>(small)]) std::swap(big, small);
      uf_parent_[static_cast<std::size_t>(small)] = big;
      uf_size_[static_cast<std::size_t>(big)] += uf_size_[static_cast<std::size_t>(small)];
      --components_;
      rec.merged = true;
      rec.absorbed = small;
      bridge_[static_cast<std::size_t>(e)] = 1;
      ++bridges_[ui];
      ++bridges_[vi];
    } else {
      auto path = bridge_path(u, v);
      if (path.empty()) return false;
      if (rc_.even && (path.size() + 1) % 2 != 0) return false;
      // Endpoints trade one bridge for a cycle; the lower bound may grow.
      for (auto x : {u, v}) {
        const auto i = static_cast<std::size_t>(x);
        if (cycles_[i] + 1 + bridges_[i] / 2 > rc_.cap[i]) return false;
      }
      for (int pe : path) {
        bridge_[static_cast<std::size_t>(pe)] = 0;
        const auto& p = g_.edge(pe);
        --bridges_[static_cast<std::size_t>(p.u)];
        --bridges_[static_cast<std::size_t>(p.v)];
      }
      // Every vertex on the new cycle gains one cycle block.
      ++cycles_[ui];
      for (auto x : cycle_vertices(path, v)) ++cycles_[static_cast<std::size_t>(x)];
      rec.converted = std::move(path);
    }
    status_[static_cast<std::size_t>(e)] = 1;
    ++deg_[ui];
    ++deg_[vi];
    --undecided_[ui];
    --undecided_[vi];
    inc_[ui].push_back(e);
    inc_[vi].push_back(e);
    records_.push_back(std::move(rec));
    return true;
  }

  int lower_bound_after_bridge(VertexId x) const {
    const auto i = static_cast<std::size_t>(x);
    return cycles_[i] + (bridges_[i] + 2) / 2;
  }

  /// Cycle vertices other than the path's far end u, walking from v.
  std::vector<VertexId> cycle_vertices(const std::vector<int>& path, VertexId v) const {
    std::vector<VertexId> out{v};
    VertexId x = v;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      x = g_.edge(path[i]).other(x);
      out.push_back(x);
    }
    return out;
  }

  void undo_include() {
    Record rec = std::move(records_.back());
    records_.pop_back();
    const int e = rec.edge;
    const auto& ed = g_.edge(e);
    const auto ui = static_cast<std::size_t>(ed.u);
    const auto vi = static_cast<std::size_t>(ed.v);
    inc_[ui].pop_back();
    inc_[vi].pop_back();
    ++undecided_[ui];
    ++undecided_[vi];
    --deg_[ui];
    --deg_[vi];
    status_[static_cast<std::size_t>(e)] = 0;
    if (rec.merged) {
      const auto small = rec.absorbed;
      const auto big = uf_parent_[static_cast<std::size_t>(small)];
      uf_size_[static_cast<std::size_t>(big)] -= uf_size_[static_cast<std::size_t>(small)];
      uf_parent_[static_cast<std::size_t>(small)] = small;
      ++components_;
      bridge_[static_cast<std::size_t>(e)] = 0;
      --bridges_[ui];
      --bridges_[vi];
    } else {
      --cycles_[ui];
      for (auto x : cycle_vertices(rec.converted, ed.v)) --cycles_[static_cast<std::size_t>(x)];
      for (int pe : rec.converted) {
        bridge_[static_cast<std::size_t>(pe)] = 1;
        const auto& p = g_.edge(pe);
        ++bridges_[static_cast<std::size_t>(p.u)];
        ++bridges_[static_cast<std::size_t>(p.v)];
      }
    }
  }

  bool support_connected() const {
    const auto n = g_.num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (int e : g_.incident_edges(x)) {
        if (status_[static_cast<std::size_t>(e)] == 2) continue;
        const auto y = g_.edge(e).other(x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n;
  }

  /// Interior marks of the included bridge path between x and y, when x and
  /// y are already connected. nullopt: not yet connected. Empty vector:
  /// connected without an edge path, which can never be repaired.
  std::optional<std::vector<char>> path_interior(VertexId x, VertexId y) {
    if (find(x) != find(y)) return std::nullopt;
    const auto path = bridge_path(x, y);
    if (path.empty()) return std::vector<char>{};
    std::vector<char> mark(g_.num_vertices(), 0);
    VertexId cur = y;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      cur = g_.edge(path[i]).other(cur);
      mark[static_cast<std::size_t>(cur)] = 1;
    }
    return mark;
  }

  /// Prunes on determined edge paths; exact when `final_check` is set.
  bool paths_feasible(bool final_check = false) {
    if (rc_.paths.empty()) return true;
    std::vector<std::vector<char>> interiors;
    for (const auto& [x, y] : rc_.paths) {
      auto in = path_interior(x, y);
      if (!in) {
        if (final_check) return false;
        return true;  // not yet decided
      }
      if (in->empty()) return false;
      interiors.push_back(std::move(*in));
    }
    const auto n = g_.num_vertices();
    auto value = [&](std::size_t v) { return final_check ? bridges_[v] + cycles_[v] : lower_bound(static_cast<VertexId>(v)); };
    if (rc_.goodness == CactusGoodness::p_good || rc_.goodness == CactusGoodness::off_path_good) {
      const int inside = rc_.goodness == CactusGoodness::p_good ? 3 : kUnlimited;
      for (std::size_t v = 0; v < n; ++v)
        if (value(v) > std::min(interiors[0][v] ? inside : 2, rc_.cap[v])) return false;
    } else if (rc_.goodness == CactusGoodness::p1p2_good) {
      std::size_t shared = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const bool on_first = interiors[0][v] || static_cast<VertexId>(v) == rc_.paths[0].first ||
                              static_cast<VertexId>(v) == rc_.paths[0].second;
        const bool on_second = interiors[1][v] || static_cast<VertexId>(v) == rc_.paths[1].first ||
                               static_cast<VertexId>(v) == rc_.paths[1].second;
        if (on_first && on_second) ++shared;
        const int both = interiors[0][v] && interiors[1][v];
        const int one = interiors[0][v] || interiors[1][v];
        const int allowed = both ? 4 : one ? 3 : 2;
        if (value(v) > std::min(allowed, rc_.cap[v])) return false;
        if (final_check && both && value(v) != 4) return false;
      }
      if (shared > 1) return false;
    }
    return true;
  }

  bool exact_solution() {
    if (components_ != 1) return false;
    const auto n = g_.num_vertices();
    for (std::size_t v = 0; v < n; ++v) {
      const int b = bridges_[v] + cycles_[v];
      if (b > rc_.cap[v]) return false;
      if (rc_.needs_one[v] && b != 1) return false;
    }
    return paths_feasible(true);
  }

  int next_edge() const {
    // A vertex with no included edge and a single undecided one forces it.
    for (std::size_t v = 0; v < deg_.size(); ++v) {
      if (deg_[v] != 0 || undecided_[v] != 1) continue;
      for (int e : g_.incident_edges(static_cast<VertexId>(v)))
        if (status_[static_cast<std::size_t>(e)] == 0) return e;
    }
    for (int e : order_)
      if (status_[static_cast<std::size_t>(e)] == 0) return e;
    return -1;
  }

  std::vector<int> included() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < status_.size(); ++e)
      if (status_[e] == 1) out.push_back(static_cast<int>(e));
    return out;
  }

  bool dfs() {
    if (!meter_.tick()) return false;
    const int e = next_edge();
    if (first_only_ && exact_solution()) return (*on_solution_)(included());
    if (e < 0) {
      if (!first_only_ && exact_solution()) return (*on_solution_)(included());
      return false;
    }
    if (include(e)) {
      if (paths_feasible() && dfs()) return true;
      undo_include();
      if (meter_.expired()) return false;
    }
    exclude(e);
    bool stop = false;
    if (support_connected()) stop = dfs();
    unexclude(e);
    return stop;
  }

  const Graph& g_;
  ResolvedConstraints rc_;
  Meter& meter_;
  std::vector<VertexId> uf_parent_;
  std::vector<int> uf_size_;
  std::size_t components_ = 0;
  std::vector<char> status_;  // 0 undecided, 1 included, 2 excluded
  std::vector<char> bridge_;
  std::vector<int> bridges_, cycles_, deg_, undecided_;
  std::vector<std::vector<int>> inc_;
  std::vector<int> order_;
  std::vector<Record> records_;
  std::vector<int> via_;
  const std::function<bool(const std::vector<int>&)>* on_solution_ = nullptr;
  bool first_only_ = true;
};

}  // namespace

bool satisfies_constraints(const Graph& host, const Graph& q, const CactusConstraints& c) {
  if (q.num_vertices() != host.num_vertices()) return false;
  for (const auto& l : host.labels())
    if (!q.contains(l)) return false;
  for (const auto& [a, b] : edge_label_list(q))
    if (!host.has_edge(a, b)) return false;
  if (!is_connected(q)) return false;
  const auto report = analyze_cactus(q);
  if (!report.is_cactus) return false;
  if (c.even && !report.is_even) return false;
  if (c.max_degree && static_cast<int>(q.max_degree()) > *c.max_degree) return false;
  for (const auto& [a, b] : c.required_edges)
    if (!q.has_edge(a, b)) return false;
  for (const auto& [a, b] : c.forbidden_edges)
    if (q.has_edge(a, b)) return false;
  auto bdeg = [&](const std::string& l) { return report.block_degrees[static_cast<std::size_t>(q.id(l))]; };
  for (const auto& l : c.required_block_degree_1)
    if (bdeg(l) != 1) return false;

  switch (c.goodness) {
    case CactusGoodness::any: return true;
    case CactusGoodness::good: return report.classification == Goodness::good;
    case CactusGoodness::p_good: {
      const auto& [x, y] = *c.required_edge_path_endpoints;
      const auto p = edge_path_between(q, x, y);
      return p && is_p_good(q, *p);
    }
    case CactusGoodness::off_path_good: {
      const auto& [x, y] = *c.required_edge_path_endpoints;
      const auto p = edge_path_between(q, x, y);
      if (!p) return false;
      std::set<std::string> interior(p->vertices.begin() + 1, p->vertices.end() - 1);
      for (const auto& l : q.labels())
        if (!interior.contains(l) && bdeg(l) > 2) return false;
      return true;
    }
    case CactusGoodness::p1p2_good: {
      const auto p1 = edge_path_between(q, c.required_edge_path_endpoints->first, c.required_edge_path_endpoints->second);
      const auto p2 = edge_path_between(q, c.second_edge_path_endpoints->first, c.second_edge_path_endpoints->second);
      if (!p1 || !p2) return false;
      try {
        return is_p1p2_good(q, *p1, *p2);
      } catch (const Error&) {
        return false;
      }
    }
  }
  return false;
}

SearchOutcome spanning_even_cactus(const Graph& g, const CactusConstraints& c, const Budget& budget) {
  auto rc = resolve(g, c);
  Meter meter(budget);
  SearchOutcome out;
  if (g.num_vertices() == 0) throw Error("cannot search an empty graph");
  CactusSearch search(g, std::move(rc), meter);
  bool found = false;
  if (search.prepare()) {
    std::function<bool(const std::vector<int>&)> take = [&](const std::vector<int>& edges) {
      for (int e : edges) out.witness_edges.push_back(g.edge_labels(e));
      return true;
    };
    found = search.run(take, true);
  }
  if (found) {
    const auto q = spanning_subgraph(g, out.witness_edges);
    if (!satisfies_constraints(g, q, c)) throw Error("internal: cactus witness failed verification");
  } else {
    out.witness_edges.clear();
  }
  meter.finish(out, found);
  return out;
}

EnumerationResult enumerate_spanning_even_cacti(const Graph& g, const CactusConstraints& c,
                                                const std::function<bool(const Graph&)>& visit,
                                                const Budget& budget, std::size_t edge_guard) {
  if (g.num_edges() > edge_guard)
    throw Error("enumeration guard: " + std::to_string(g.num_edges()) + " edges exceed " +
                std::to_string(edge_guard));
  if (g.num_vertices() == 0) throw Error("cannot enumerate over an empty graph");
  auto rc = resolve(g, c);
  Meter meter(budget);
  CactusSearch search(g, std::move(rc), meter);
  EnumerationResult result;
  bool stopped = false;
  if (search.prepare()) {
    std::function<bool(const std::vector<int>&)> each = [&](const std::vector<int>& edges) {
      std::vector<LabelPair> labels;
      for (int e : edges) labels.push_back(g.edge_labels(e));
      const auto q = spanning_subgraph(g, labels);
      if (!satisfies_constraints(g, q, c)) throw Error("internal: enumerated cactus failed verification");
      ++result.count;
      if (!visit(q)) {
        stopped = true;
        return true;
      }
      return false;
    };
    search.run(each, false);
  }
  result.nodes_explored = meter.nodes();
  result.complete = !stopped && !meter.expired();
  return result;
}

// ------------------------------------------------------------------ k-tree

namespace {

class TreeSearch {
 public:
  TreeSearch(const Graph& g, int k, Meter& meter)
      : g_(g), k_(k), meter_(meter), in_(g.num_vertices(), 0), tdeg_(g.num_vertices(), 0),
        forbidden_(g.num_edges(), 0) {}

  bool run() {
    in_[0] = 1;
    count_ = 1;
    return dfs();
  }

  const std::vector<int>& edges() const { return tree_; }

 private:
  bool open(VertexId y) const { return in_[static_cast<std::size_t>(y)] && tdeg_[static_cast<std::size_t>(y)] < k_; }

  bool feasible() const {
    const auto n = g_.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    for (std::size_t v = 0; v < n; ++v)
      if (open(static_cast<VertexId>(v))) {
        seen[v] = 1;
        stack.push_back(static_cast<VertexId>(v));
      }
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (int e : g_.incident_edges(x)) {
        if (forbidden_[static_cast<std::size_t>(e)]) continue;
        const auto y = g_.edge(e).other(x);
        if (in_[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!in_[v] && !seen[v]) return false;
    return true;
  }

  bool dfs() {
    if (count_ == g_.num_vertices()) return true;
    if (!meter_.tick()) return false;
    if (!feasible()) return false;
    // Outside vertex with the fewest attachment options.
    VertexId best = -1;
    int best_options = INT_MAX;
    for (std::size_t v = 0; v < g_.num_vertices(); ++v) {
      if (in_[v]) continue;
      int options = 0;
      for (int e : g_.incident_edges(static_cast<VertexId>(v)))
        if (!forbidden_[static_cast<std::size_t>(e)] && open(g_.edge(e).other(static_cast<VertexId>(v)))) ++options;
      if (options > 0 && options < best_options) {
        best_options = options;
        best = static_cast<VertexId>(v);
      }
    }
    if (best < 0) return false;
    int pick = -1;
    for (int e : g_.incident_edges(best)) {
      if (forbidden_[static_cast<std::size_t>(e)]) continue;
      const auto y = g_.edge(e).other(best);
      if (!open(y)) continue;
      if (pick < 0 || tdeg_[static_cast<std::size_t>(y)] <
                          tdeg_[static_cast<std::size_t>(g_.edge(pick).other(best))])
        pick = e;
    }
    const auto y = g_.edge(pick).other(best);
    in_[static_cast<std::size_t>(best)] = 1;
    ++tdeg_[static_cast<std::size_t>(best)];
    ++tdeg_[static_cast<std::size_t>(y)];
    ++count_;
    tree_.push_back(pick);
    if (dfs()) return true;
    tree_.pop_back();
    --count_;
    --tdeg_[static_cast<std::size_t>(y)];
    --tdeg_[static_cast<std::size_t>(best)];
    in_[static_cast<std::size_t>(best)] = 0;
    if (meter_.expired()) return false;
    forbidden_[static_cast<std::size_t>(pick)] = 1;
    const bool ok = dfs();
    forbidden_[static_cast<std::size_t>(pick)] = 0;
    return ok;
  }

  const Graph& g_;
  int k_;
  Meter& meter_;
  std::vector<char> in_;
  std::vector<int> tdeg_;
  std::vector<char> forbidden_;
  std::vector<int> tree_;
  std::size_t count_ = 0;
};

}  // namespace

SearchOutcome k_tree(const Graph& g, int k, const Budget& budget) {
  if (k < 2) throw Error("k-tree needs k >= 2");
  if (g.num_vertices() == 0) throw Error("cannot search an empty graph");
  Meter meter(budget);
  SearchOutcome out;
  bool found = false;
  if (is_connected(g)) {
    TreeSearch search(g, k, meter);
    found = search.run();
    if (found) {
      for (int e : search.edges()) out.witness_edges.push_back(g.edge_labels(e));
      if (!is_k_tree(g, out.witness_edges, k)) throw Error("internal: k-tree failed verification");
    }
  }
  meter.finish(out, found);
  return out;
}

// ------------------------------------------------------------------ k-walk

namespace {

class WalkSearch {
 public:
  WalkSearch(const Graph& g, int k, Meter& meter)
      : g_(g), k_(k), meter_(meter), mult_(g.num_edges(), -1), deg_(g.num_vertices(), 0),
        undecided_(g.num_vertices(), 0) {
    for (const auto& e : g.edges()) {
      ++undecided_[static_cast<std::size_t>(e.u)];
      ++undecided_[static_cast<std::size_t>(e.v)];
    }
  }

  bool run() { return dfs(0); }
  const std::vector<int>& multiplicities() const { return mult_; }

 private:
  bool vertex_ok(std::size_t v) const {
    if (deg_[v] > 2 * k_) return false;
    if (undecided_[v] == 0 && (deg_[v] % 2 != 0 || deg_[v] == 0)) return false;
    return true;
  }

  bool connected(bool support) const {
    const auto n = g_.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (int e : g_.incident_edges(x)) {
        const int m = mult_[static_cast<std::size_t>(e)];
        if (support ? m == 0 : m <= 0) continue;
        const auto y = g_.edge(e).other(x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n;
  }

  bool complete_now() const {
    for (std::size_t v = 0; v < deg_.size(); ++v)
      if (deg_[v] == 0 || deg_[v] % 2 != 0) return false;
    return connected(false);
  }

  bool dfs(std::size_t next) {
    if (!meter_.tick()) return false;
    if (complete_now()) {
      for (std::size_t e = next; e < mult_.size(); ++e) mult_[e] = 0;
      return true;
    }
    if (next == mult_.size()) return false;
    const auto& ed = g_.edge(static_cast<int>(next));
    const auto u = static_cast<std::size_t>(ed.u);
    const auto v = static_cast<std::size_t>(ed.v);
    --undecided_[u];
    --undecided_[v];
    for (int m : {1, 2, 0}) {
      mult_[next] = m;
      deg_[u] += m;
      deg_[v] += m;
      if (vertex_ok(u) && vertex_ok(v) && (m != 0 || connected(true)) && dfs(next + 1)) return true;
      deg_[u] -= m;
      deg_[v] -= m;
      if (meter_.expired()) break;
    }
    mult_[next] = -1;
    ++undecided_[u];
    ++undecided_[v];
    return false;
  }

  const Graph& g_;
  int k_;
  Meter& meter_;
  std::vector<int> mult_;  // -1 undecided
  std::vector<int> deg_;
  std::vector<int> undecided_;
};

/// Euler circuit of the multigraph given by edge multiplicities.
std::vector<VertexId> euler_circuit(const Graph& g, const std::vector<int>& mult) {
  std::vector<std::vector<std::pair<VertexId, int>>> adj(g.num_vertices());
  int slot = 0;
  for (std::size_t e = 0; e < mult.size(); ++e)
    for (int c = 0; c < mult[e]; ++c) {
      const auto& ed = g.edge(static_cast<int>(e));
      adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, slot});
      adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, slot});
      ++slot;
    }
  std::vector<char> used(static_cast<std::size_t>(slot), 0);
  std::vector<std::size_t> ptr(g.num_vertices(), 0);
  std::vector<VertexId> stack{0};
  std::vector<VertexId> circuit;
  while (!stack.empty()) {
    const auto v = stack.back();
    auto& p = ptr[static_cast<std::size_t>(v)];
    const auto& list = adj[static_cast<std::size_t>(v)];
    while (p < list.size() && used[static_cast<std::size_t>(list[p].second)]) ++p;
    if (p == list.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[static_cast<std::size_t>(list[p].second)] = 1;
      stack.push_back(list[p].first);
    }
  }
  circuit.pop_back();  // closed: drop the repeated start
  return circuit;
}

}  // namespace

SearchOutcome k_walk(const Graph& g, int k, const Budget& budget) {
  if (k < 1) throw Error("k-walk needs k >= 1");
  if (g.num_vertices() == 0) throw Error("cannot search an empty graph");
  if (k == 1 && g.num_vertices() >= 3) return hamilton_cycle(g, budget);
  Meter meter(budget);
  SearchOutcome out;
  bool found = false;
  if (g.num_vertices() == 1) {
    found = true;
    out.witness_sequence = {g.label(0)};
  } else if (is_connected(g)) {
    WalkSearch search(g, k, meter);
    found = search.run();
    if (found) {
      const auto& mult = search.multiplicities();
      out.witness_sequence = labels_of(g, euler_circuit(g, mult));
      for (std::size_t e = 0; e < mult.size(); ++e)
        for (int c = 0; c < mult[e]; ++c) out.witness_edges.push_back(g.edge_labels(static_cast<int>(e)));
    }
  }
  if (found && !is_k_walk(g, out.witness_sequence, k)) throw Error("internal: k-walk failed verification");
  meter.finish(out, found);
  return out;
}

// ----------------------------------------------------------- linear forest

namespace {

class ForestSearch {
 public:
  ForestSearch(const Graph& g, std::vector<std::pair<VertexId, VertexId>> pairs, Meter& meter)
      : g_(g), pairs_(std::move(pairs)), meter_(meter), visited_(g.num_vertices(), 0),
        endpoint_of_(g.num_vertices(), -1) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      endpoint_of_[static_cast<std::size_t>(pairs_[i].first)] = static_cast<int>(i);
      endpoint_of_[static_cast<std::size_t>(pairs_[i].second)] = static_cast<int>(i);
    }
  }

  bool run() {
    if (pairs_.empty()) return g_.num_vertices() == 0;
    return start(0);
  }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

 private:
  bool start(std::size_t i) {
    if (i == pairs_.size()) return visited_count_ == g_.num_vertices();
    const auto a = pairs_[i].first;
    visited_[static_cast<std::size_t>(a)] = 1;
    ++visited_count_;
    if (extend(i, a)) return true;
    visited_[static_cast<std::size_t>(a)] = 0;
    --visited_count_;
    return false;
  }

  bool usable(std::size_t i, VertexId w) const {
    if (visited_[static_cast<std::size_t>(w)]) return false;
    const int owner = endpoint_of_[static_cast<std::size_t>(w)];
    return owner < 0 || (static_cast<std::size_t>(owner) == i && w == pairs_[i].second);
  }

  bool feasible(std::size_t i, VertexId end) const {
    const auto n = g_.num_vertices();
    // Degree condition for interior candidates.
    for (std::size_t w = 0; w < n; ++w) {
      if (visited_[w]) continue;
      int avail = 0;
      for (auto x : g_.neighbors(static_cast<VertexId>(w)))
        if (!visited_[static_cast<std::size_t>(x)] || x == end) ++avail;
      const bool terminal = endpoint_of_[w] >= 0;
      if (avail < (terminal ? 1 : 2)) return false;
    }
    // Components of the unvisited graph.
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (visited_[s] || comp[s] >= 0) continue;
      std::vector<VertexId> stack{static_cast<VertexId>(s)};
      comp[s] = count;
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (auto y : g_.neighbors(x))
          if (!visited_[static_cast<std::size_t>(y)] && comp[static_cast<std::size_t>(y)] < 0) {
            comp[static_cast<std::size_t>(y)] = count;
            stack.push_back(y);
          }
      }
      ++count;
    }
    std::vector<char> anchored(static_cast<std::size_t>(count), 0);
    const auto target = static_cast<std::size_t>(pairs_[i].second);
    if (comp[target] < 0) return false;
    bool target_reachable = g_.has_edge(end, pairs_[i].second);
    for (auto x : g_.neighbors(end))
      if (!visited_[static_cast<std::size_t>(x)] && comp[static_cast<std::size_t>(x)] == comp[target]) target_reachable = true;
    if (!target_reachable) return false;
    anchored[static_cast<std::size_t>(comp[target])] = 1;
    for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
      const int ca = comp[static_cast<std::size_t>(pairs_[j].first)];
      const int cb = comp[static_cast<std::size_t>(pairs_[j].second)];
      if (ca != cb) return false;
      anchored[static_cast<std::size_t>(ca)] = 1;
    }
    for (int c = 0; c < count; ++c)
      if (!anchored[static_cast<std::size_t>(c)]) return false;
    return true;
  }

  int available(VertexId w, VertexId end) const {
    int c = 0;
    for (auto x : g_.neighbors(w))
      if (!visited_[static_cast<std::size_t>(x)] || x == end) ++c;
    return c;
  }

  bool extend(std::size_t i, VertexId end) {
    if (!meter_.tick()) return false;
    if (!feasible(i, end)) return false;
    std::vector<std::pair<int, VertexId>> next;
    for (auto w : g_.neighbors(end))
      if (usable(i, w)) next.emplace_back(w == pairs_[i].second ? INT_MAX : available(w, end), w);
    std::sort(next.begin(), next.end());
    for (const auto& [_, w] : next) {
      visited_[static_cast<std::size_t>(w)] = 1;
      ++visited_count_;
      edges_.emplace_back(end, w);
      const bool ok = w == pairs_[i].second ? start(i + 1) : extend(i, w);
      if (ok) return true;
      edges_.pop_back();
      --visited_count_;
      visited_[static_cast<std::size_t>(w)] = 0;
      if (meter_.expired()) return false;
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::pair<VertexId, VertexId>> pairs_;
  Meter& meter_;
  std::vector<char> visited_;
  std::vector<int> endpoint_of_;
  std::size_t visited_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

}  // namespace

SearchOutcome linear_forest(const Graph& g, const std::vector<std::pair<std::string, std::string>>& pairs,
                            const Budget& budget) {
  std::vector<std::pair<VertexId, VertexId>> ids;
  std::set<std::string> seen;
  for (const auto& [a, b] : pairs) {
    if (a == b) throw Error("path endpoints must be distinct ('" + a + "')");
    for (const auto& x : {a, b}) {
      if (!g.contains(x)) throw Error("endpoint '" + x + "' is not in the graph");
      if (!seen.insert(x).second) throw Error("endpoint '" + x + "' appears in more than one pair");
    }
    ids.emplace_back(g.id(a), g.id(b));
  }
  Meter meter(budget);
  ForestSearch search(g, ids, meter);
  SearchOutcome out;
  const bool found = search.run();
  if (found) {
    for (const auto& [a, b] : search.edges()) out.witness_edges.emplace_back(g.label(a), g.label(b));
    if (!is_linear_forest(g, out.witness_edges, pairs)) throw Error("internal: linear forest failed verification");
  }
  meter.finish(out, found);
  return out;
}

}  // namespace cactuslab
