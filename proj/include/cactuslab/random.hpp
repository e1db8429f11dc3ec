#pragma once

#include <random>

#include "cactuslab/graph.hpp"

namespace cactuslab {

struct RandomCactusOptions {
  int max_vertices = 20;
  bool even = true;
  bool max_degree_3 = false;
};

/// Random good cactus grown block by block from a single vertex. Vertices are
/// labelled v0, v1, ... and there are always at least two of them.
Graph random_good_cactus(std::mt19937_64& rng, const RandomCactusOptions& options);

}  // namespace cactuslab
