#include <doctest.h>

#include <random>
#include <set>

#include "cactuslab/cactus.hpp"
#include "cactuslab/certify.hpp"
#include "cactuslab/prism.hpp"
#include "cactuslab/random.hpp"
#include "cactuslab/verify.hpp"

using namespace cactuslab;

TEST_CASE("prism labels") {
  CHECK(prism_label("v3", Side::alpha) == "v3@a");
  CHECK(prism_label("v3", Side::beta) == "v3@b");
  const auto p = parse_prism_label("B2:w1@b");
  CHECK(p.base == "B2:w1");
  CHECK(p.side == Side::beta);
  CHECK(flip_label("x@a") == "x@b");
  CHECK_THROWS_AS(parse_prism_label("x"), Error);
  CHECK_THROWS_AS(parse_prism_label("x@c"), Error);
}

TEST_CASE("prism of a triangle") {
  const auto k3 = Graph::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const auto p = prism(k3);
  CHECK(p.num_vertices() == 6);
  CHECK(p.num_edges() == 9);  // 2|E| + |V|
  CHECK(p.has_edge("a@a", "a@b"));
  CHECK(p.has_edge("a@a", "b@a"));
  CHECK_FALSE(p.has_edge("a@a", "b@b"));
  const auto r = reflect(spanning_subgraph(p, {{"a@a", "b@a"}}));
  CHECK(r.has_edge("a@b", "b@b"));
  CHECK(reflect_edges({{"a@a", "a@b"}}) == std::vector<LabelPair>{{"a@b", "a@a"}});
}

TEST_CASE("prism over an even cycle is hamiltonian through every vertical") {
  const auto c4 = Graph::from_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  const auto cyc = cactus_prism_hamilton(c4, {"a", "b", "c", "d"});
  const auto p = prism(c4);
  CHECK(check_hamilton_cycle(p, cyc).ok());
  const auto edges = cycle_edges(cyc);
  std::set<LabelPair> es;
  for (auto [x, y] : edges) es.insert(x < y ? LabelPair{x, y} : LabelPair{y, x});
  for (const std::string v : {"a", "b", "c", "d"}) CHECK(es.contains({v + "@a", v + "@b"}));
}

TEST_CASE("prism Hamilton cycles of random good even cacti keep the verticals at block-degree-one vertices") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const auto k = random_good_cactus(rng, RandomCactusOptions{});
    const auto report = analyze_cactus(k);
    std::vector<std::string> ones;
    for (std::size_t v = 0; v < k.num_vertices(); ++v)
      if (report.block_degrees[v] == 1) ones.push_back(k.label(static_cast<VertexId>(v)));
    const auto cyc = cactus_prism_hamilton(k, ones);
    CHECK(check_hamilton_cycle(prism(k), cyc).ok());
    std::set<LabelPair> es;
    for (auto [x, y] : cycle_edges(cyc)) es.insert(x < y ? LabelPair{x, y} : LabelPair{y, x});
    for (const auto& v : ones) CHECK(es.contains({v + "@a", v + "@b"}));
  }
}

TEST_CASE("prism Hamilton construction rejects non-cacti and odd cycles") {
  const auto k3 = Graph::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_THROWS_AS(cactus_prism_hamilton(k3), Error);
}

TEST_CASE("fragment path systems") {
  const auto A = fragment_A();
  const auto l = solve_path_system(A, PathSpec{"A", {{"u1@a", "u1@b"}, {"u3@a", "u3@b"}}});
  // Every path system, if found, is a spanning linear forest with the right ends.
  if (l.outcome.found())
    CHECK(is_linear_forest(prism(A.graph), l.system.edges, {{"u1@a", "u1@b"}, {"u3@a", "u3@b"}}));
  const auto D = fragment_D(1);
  const auto L = solve_path_system(D, spec_L());
  REQUIRE(L.outcome.found());
  CHECK(is_linear_forest(prism(D.graph), L.system.edges, spec_L().pairs));
  CHECK_THROWS_AS(solve_path_system(D, PathSpec{"bad", {{"zz@a", "l@a"}}}), Error);
}

TEST_CASE("stitched Hamilton cycle of the prism over G(D_n)") {
  const auto kA = find_kA();
  for (int n = 1; n <= 2; ++n) {
    const auto r = stitch_hamilton_GD(n, kA);
    const auto g = build_G(FragmentType::D, n).graph;
    CHECK(r.cycle.size() == 2 * g.num_vertices());
    CHECK(check_hamilton_cycle(prism(g), r.cycle).ok());
    CHECK_FALSE(r.notes.empty());
  }
}

TEST_CASE("cycle sequences start at the smallest label") {
  const auto seq = sequence_from_cycle_edges({{"c", "b"}, {"a", "b"}, {"c", "a"}});
  CHECK(seq.front() == "a");
  CHECK(seq.size() == 3);
}
