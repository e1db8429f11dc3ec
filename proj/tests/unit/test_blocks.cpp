#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "cactuslab/blocks.hpp"
#include "cactuslab/embedding.hpp"
#include "cactuslab/families.hpp"

using namespace cactuslab;

namespace {

Graph petersen() {
  Graph g;
  for (int i = 0; i < 10; ++i) g.add_vertex("p" + std::to_string(i));
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Brute force: no separator of size < k, by trying every subset.
bool naive_k_connected(const Graph& g, int k) {
  const int n = static_cast<int>(g.num_vertices());
  if (n <= k) return false;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) >= k) continue;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> remap(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1)) remap[v] = m++;
    for (const auto& e : g.edges())
      if (remap[e.u] >= 0 && remap[e.v] >= 0) edges.push_back({remap[e.u], remap[e.v]});
    if (!oracle::connected_on(static_cast<std::size_t>(m), edges)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("blocks of two triangles joined by a bridge") {
  const auto g = Graph::from_labels({"a", "b", "c", "d", "e", "f"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"},
                                                                    {"d", "e"}, {"e", "f"}, {"f", "d"}});
  const auto bd = block_decomposition(g);
  CHECK(bd.blocks.size() == 3);
  CHECK(bd.is_cycle(0));
  CHECK(bd.is_bridge(1));
  CHECK(bd.block_degree(g.id("c")) == 2);
  CHECK(bd.block_degree(g.id("a")) == 1);
  CHECK(bd.cut_vertices == std::vector<VertexId>{g.id("c"), g.id("d")});
  const auto path = block_path(g, "a", "e");
  CHECK(path.num_edges() == 7);
  CHECK(block_path(g, "a", "b").num_edges() == 3);
  CHECK(block_path(g, "a", "a").num_vertices() == 1);
}

TEST_CASE("isolated vertices have block degree zero") {
  const auto g = Graph::from_labels({"a", "b", "z"}, {{"a", "b"}});
  CHECK(block_decomposition(g).block_degree(g.id("z")) == 0);
}

TEST_CASE("connectivity on known graphs") {
  const auto p = petersen();
  CHECK(is_k_connected(p, 3));
  const auto cyc = Graph::from_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  CHECK(is_k_connected(cyc, 2));
  CHECK_FALSE(is_k_connected(cyc, 3));
  CHECK_THROWS_AS(is_k_connected(cyc, 4), Error);
}

TEST_CASE("connectivity agrees with subset enumeration on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 6;
    const auto g = oracle::random_connected_graph(rng, n, trial % 8);
    for (int k = 1; k <= 3; ++k) CHECK(is_k_connected(g, k) == naive_k_connected(g, k));
  }
}

TEST_CASE("block count matches the cut structure on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_connected_graph(rng, 6 + trial % 5, trial % 5);
    const auto bd = block_decomposition(g);
    // A connected graph has sum over blocks of (|B| - 1) = |V| - 1.
    std::size_t total = 0;
    for (const auto& b : bd.block_vertices) total += b.size() - 1;
    CHECK(total == g.num_vertices() - 1);
    // A vertex is a cut vertex iff deleting it disconnects the graph.
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
      std::vector<char> removed(g.num_vertices(), 0);
      removed[static_cast<std::size_t>(v)] = 1;
      const bool cut = std::find(bd.cut_vertices.begin(), bd.cut_vertices.end(), v) != bd.cut_vertices.end();
      CHECK(cut == !connected_without(g, removed));
    }
  }
}

TEST_CASE("family embeddings satisfy Euler's formula") {
  for (const auto& chart : {gadget_I(), fragment_A(), fragment_C(2), fragment_D(1), build_G(FragmentType::C, 1),
                            build_G(FragmentType::D, 1)}) {
    const auto r = check_embedding(chart.graph, chart.embedding);
    CHECK(r.euler_holds);
    CHECK(r.outer_face_matches);
    // V - E + F = 2 for a connected plane graph.
    CHECK(static_cast<long>(chart.graph.num_vertices()) - static_cast<long>(chart.graph.num_edges()) +
              static_cast<long>(r.face_count) ==
          2);
  }
}

TEST_CASE("embedding checks reject a bad rotation") {
  const auto chart = fragment_C(1);
  auto emb = chart.embedding;
  emb.rotation[0].pop_back();
  CHECK_THROWS_AS(check_embedding(chart.graph, emb), Error);
}

TEST_CASE("cyclic sequence equality allows rotation and reversal") {
  CHECK(same_cyclic_sequence({1, 2, 3, 4}, {3, 4, 1, 2}));
  CHECK(same_cyclic_sequence({1, 2, 3, 4}, {4, 3, 2, 1}));
  CHECK_FALSE(same_cyclic_sequence({1, 2, 3, 4}, {1, 3, 2, 4}));
}
