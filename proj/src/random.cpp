#include "cactuslab/random.hpp"

#include <string>
#include <vector>

namespace cactuslab {

Graph random_good_cactus(std::mt19937_64& rng, const RandomCactusOptions& options) {
  if (options.max_vertices < 2) throw Error("random cactus needs room for two vertices");
  std::uniform_int_distribution<int> size_dist(2, options.max_vertices);
  const int target = size_dist(rng);
  Graph g;
  std::vector<int> blocks;  // block degree per vertex
  auto fresh = [&]() {
    blocks.push_back(0);
    return g.add_vertex("v" + std::to_string(g.num_vertices()));
  };
  fresh();
  while (static_cast<int>(g.num_vertices()) < target) {
    const int room = target - static_cast<int>(g.num_vertices());
    // Cycle lengths that fit; the attachment vertex is already present.
    std::vector<int> lengths;
    for (int len = 3; len - 1 <= room; ++len)
      if (!options.even || len % 2 == 0) lengths.push_back(len);
    std::bernoulli_distribution want_cycle(0.5);
    const bool cycle = !lengths.empty() && want_cycle(rng);
    const std::size_t extra = cycle ? 2 : 1;

    std::vector<VertexId> anchors;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (blocks[v] >= 2) continue;
      if (options.max_degree_3 && g.degree(static_cast<VertexId>(v)) + extra > 3) continue;
      anchors.push_back(static_cast<VertexId>(v));
    }
    if (anchors.empty()) {
      if (!cycle) break;
      // Fall back to a pendant edge if a cycle does not fit anywhere.
      for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (blocks[v] < 2 && (!options.max_degree_3 || g.degree(static_cast<VertexId>(v)) + 1 <= 3))
          anchors.push_back(static_cast<VertexId>(v));
      if (anchors.empty()) break;
      const auto a = anchors[std::uniform_int_distribution<std::size_t>(0, anchors.size() - 1)(rng)];
      const auto b = fresh();
      g.add_edge(a, b);
      ++blocks[static_cast<std::size_t>(a)];
      ++blocks[static_cast<std::size_t>(b)];
      continue;
    }
    const auto a = anchors[std::uniform_int_distribution<std::size_t>(0, anchors.size() - 1)(rng)];
    ++blocks[static_cast<std::size_t>(a)];
    if (!cycle) {
      const auto b = fresh();
      g.add_edge(a, b);
      ++blocks[static_cast<std::size_t>(b)];
      continue;
    }
    const int len = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
    VertexId prev = a;
    for (int i = 1; i < len; ++i) {
      const auto v = fresh();
      ++blocks[static_cast<std::size_t>(v)];
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, a);
  }
  return g;
}

}  // namespace cactuslab
