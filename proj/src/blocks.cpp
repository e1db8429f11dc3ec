#include "cactuslab/blocks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cactuslab {

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> raw_blocks;
  std::vector<int> edge_stack;
  int timer = 0;

  struct Frame {
    VertexId v;
    int parent_edge;
    std::size_t next;
  };

  int component = 0;
  std::vector<int> raw_component;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    comp[root] = component;
    stack.push_back({static_cast<VertexId>(root), -1, 0});
    while (!stack.empty()) {
      auto& fr = stack.back();
      const auto v = static_cast<std::size_t>(fr.v);
      const auto& inc = g.incident_edges(fr.v);
      if (fr.next < inc.size()) {
        const int e = inc[fr.next++];
        if (e == fr.parent_edge) continue;
        const auto w = static_cast<std::size_t>(g.edge(e).other(fr.v));
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          comp[w] = component;
          stack.push_back({static_cast<VertexId>(w), e, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const int pe = fr.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const auto p = static_cast<std::size_t>(stack.back().v);
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<int> block;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == pe) break;
        }
        std::sort(block.begin(), block.end());
        raw_blocks.push_back(std::move(block));
        raw_component.push_back(component);
      }
    }
    ++component;
  }

  std::vector<std::size_t> order(raw_blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return raw_blocks[a].front() < raw_blocks[b].front(); });

  BlockDecomposition bd;
  bd.block_membership.assign(n, {});
  for (auto i : order) {
    const int b = static_cast<int>(bd.blocks.size());
    std::vector<VertexId> verts;
    for (int e : raw_blocks[i]) {
      verts.push_back(g.edge(e).u);
      verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (auto v : verts) bd.block_membership[static_cast<std::size_t>(v)].push_back(b);
    bd.blocks.push_back(std::move(raw_blocks[i]));
    bd.block_vertices.push_back(std::move(verts));
    bd.block_component.push_back(raw_component[i]);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bd.block_membership[v].size() >= 2) bd.cut_vertices.push_back(static_cast<VertexId>(v));
  return bd;
}

std::vector<int> block_path_blocks(const Graph& g, const BlockDecomposition& bd, VertexId u,
                                   VertexId v) {
  if (u == v) return {};
  // Block-vertex incidence tree: nodes [0, n) are vertices, [n, n + #blocks) blocks.
  const int n = static_cast<int>(g.num_vertices());
  const int total = n + static_cast<int>(bd.blocks.size());
  std::vector<int> prev(static_cast<std::size_t>(total), -2);
  std::deque<int> queue{u};
  prev[static_cast<std::size_t>(u)] = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == v) break;
    auto visit = [&](int y) {
      if (prev[static_cast<std::size_t>(y)] == -2) {
        prev[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    };
    if (x < n) {
      for (int b : bd.block_membership[static_cast<std::size_t>(x)]) visit(n + b);
    } else {
      for (auto w : bd.block_vertices[static_cast<std::size_t>(x - n)]) visit(w);
    }
  }
  if (prev[static_cast<std::size_t>(v)] == -2)
    throw Error("'" + g.label(u) + "' and '" + g.label(v) + "' are not connected");
  std::vector<int> out;
  for (int x = v; x != -1; x = prev[static_cast<std::size_t>(x)])
    if (x >= n) out.push_back(x - n);
  std::reverse(out.begin(), out.end());
  return out;
}

Graph block_path(const Graph& g, std::string_view u, std::string_view v) {
  const auto a = g.id(u);
  const auto b = g.id(v);
  if (a == b) {
    Graph single;
    single.add_vertex(g.label(a));
    return single;
  }
  const auto bd = block_decomposition(g);
  std::vector<int> edges;
  for (int blk : block_path_blocks(g, bd, a, b))
    for (int e : bd.blocks[static_cast<std::size_t>(blk)]) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  // Keep g's vertex order for the vertices touched by these edges.
  std::vector<char> used(g.num_vertices(), 0);
  for (int e : edges) {
    used[static_cast<std::size_t>(g.edge(e).u)] = 1;
    used[static_cast<std::size_t>(g.edge(e).v)] = 1;
  }
  Graph h;
  for (std::size_t x = 0; x < g.num_vertices(); ++x)
    if (used[x]) h.add_vertex(g.label(static_cast<VertexId>(x)));
  for (int e : edges) h.add_edge(g.label(g.edge(e).u), g.label(g.edge(e).v));
  return h;
}

bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const std::size_t n = g.num_vertices();
  std::size_t start = n;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (removed[v]) continue;
    ++alive;
    if (start == n) start = v;
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{static_cast<VertexId>(start)};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (removed[wi] || seen[wi]) continue;
      seen[wi] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == alive;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw Error("k must be at least 1");
  if (k > 3) throw Error("k-connectivity is only supported for k <= 3");
  const std::size_t n = g.num_vertices();
  if (n <= static_cast<std::size_t>(k)) return false;
  std::vector<char> removed(n, 0);
  if (!connected_without(g, removed)) return false;
  if (k >= 2) {
    for (std::size_t a = 0; a < n; ++a) {
      removed[a] = 1;
      if (!connected_without(g, removed)) return false;
      if (k >= 3) {
        for (std::size_t b = a + 1; b < n; ++b) {
          removed[b] = 1;
          const bool ok = connected_without(g, removed);
          removed[b] = 0;
          if (!ok) return false;
        }
      }
      removed[a] = 0;
    }
  }
  return true;
}

}  // namespace cactuslab
