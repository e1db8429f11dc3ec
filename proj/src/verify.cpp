#include "cactuslab/verify.hpp"

#include <map>
#include <set>

namespace cactuslab {

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

bool all_edges_in(const Graph& g, const std::vector<LabelPair>& edges) {
  std::set<std::pair<std::string, std::string>> seen;
  for (auto [a, b] : edges) {
    if (!g.contains(a) || !g.contains(b) || !g.has_edge(a, b)) return false;
    if (b < a) std::swap(a, b);
    if (!seen.insert({a, b}).second) return false;
  }
  return true;
}

Adjacency adjacency(const std::vector<LabelPair>& edges) {
  Adjacency adj;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::size_t reach(const Adjacency& adj, const std::string& from) {
  std::set<std::string> seen{from};
  std::vector<std::string> stack{from};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& w : it->second)
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size();
}

}  // namespace

std::vector<LabelPair> cycle_edges(const std::vector<std::string>& sequence) {
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    out.emplace_back(sequence[i], sequence[(i + 1) % sequence.size()]);
  return out;
}

CycleCheck check_hamilton_cycle_edges(const Graph& g, const std::vector<LabelPair>& edges) {
  CycleCheck c;
  c.edges_in_graph = all_edges_in(g, edges);
  const auto adj = adjacency(edges);
  c.spanning = adj.size() == g.num_vertices();
  for (const auto& l : adj)
    if (!g.contains(l.first)) c.spanning = false;
  c.two_regular = !adj.empty();
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) c.two_regular = false;
  c.connected = !adj.empty() && reach(adj, adj.begin()->first) == adj.size();
  return c;
}

CycleCheck check_hamilton_cycle(const Graph& g, const std::vector<std::string>& sequence) {
  if (sequence.size() < 3) return {};
  return check_hamilton_cycle_edges(g, cycle_edges(sequence));
}

bool is_hamilton_path(const Graph& g, const std::vector<std::string>& sequence,
                      std::optional<std::pair<std::string, std::string>> endpoints) {
  if (sequence.size() != g.num_vertices() || sequence.empty()) return false;
  std::set<std::string> seen(sequence.begin(), sequence.end());
  if (seen.size() != sequence.size()) return false;
  for (const auto& v : sequence)
    if (!g.contains(v)) return false;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
    if (!g.has_edge(sequence[i], sequence[i + 1])) return false;
  if (endpoints) {
    const auto& [u, v] = *endpoints;
    const bool forward = sequence.front() == u && sequence.back() == v;
    const bool backward = sequence.front() == v && sequence.back() == u;
    if (!forward && !backward) return false;
  }
  return true;
}

bool is_k_walk(const Graph& g, const std::vector<std::string>& sequence, int k) {
  if (sequence.empty()) return false;
  std::map<std::string, int> visits;
  for (const auto& v : sequence) {
    if (!g.contains(v)) return false;
    ++visits[v];
  }
  if (visits.size() != g.num_vertices()) return false;
  for (const auto& [v, c] : visits)
    if (c > k) return false;
  if (sequence.size() == 1) return g.num_vertices() == 1;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& a = sequence[i];
    const auto& b = sequence[(i + 1) % sequence.size()];
    if (a == b || !g.has_edge(a, b)) return false;
  }
  return true;
}

bool is_k_tree(const Graph& g, const std::vector<LabelPair>& edges, int k) {
  if (g.num_vertices() == 0) return false;
  if (edges.size() + 1 != g.num_vertices() || !all_edges_in(g, edges)) return false;
  const auto adj = adjacency(edges);
  for (const auto& [v, nb] : adj)
    if (static_cast<int>(nb.size()) > k) return false;
  if (g.num_vertices() == 1) return true;
  // n - 1 edges and connected means a spanning tree.
  return adj.size() == g.num_vertices() && reach(adj, adj.begin()->first) == g.num_vertices();
}

bool is_linear_forest(const Graph& g, const std::vector<LabelPair>& edges,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (!all_edges_in(g, edges)) return false;
  const auto adj = adjacency(edges);
  for (const auto& [v, nb] : adj)
    if (nb.size() > 2) return false;
  std::set<std::string> covered;
  std::set<std::pair<std::string, std::string>> found;
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 1 || covered.contains(v)) continue;
    // Walk from an end to the other end.
    std::string prev;
    std::string cur = v;
    covered.insert(cur);
    while (true) {
      const auto& next = adj.at(cur);
      const std::string* step = nullptr;
      for (const auto& w : next)
        if (w != prev) step = &w;
      if (!step || (next.size() == 1 && !prev.empty())) break;
      prev = cur;
      cur = *step;
      if (!covered.insert(cur).second) return false;
    }
    found.insert({std::min(v, cur), std::max(v, cur)});
  }
  if (covered.size() != adj.size()) return false;  // a cycle component
  if (covered.size() != g.num_vertices()) return false;
  std::set<std::pair<std::string, std::string>> wanted;
  for (const auto& [a, b] : pairs) wanted.insert({std::min(a, b), std::max(a, b)});
  return found == wanted && wanted.size() == pairs.size();
}

}  // namespace cactuslab
