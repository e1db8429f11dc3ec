#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "cactuslab/blocks.hpp"
#include "cactuslab/families.hpp"

using namespace cactuslab;

TEST_CASE("gadget I") {
  const auto I = gadget_I();
  CHECK(I.graph.num_vertices() == 14);
  CHECK(I.graph.num_edges() == 18);
  CHECK(is_k_connected(I.graph, 2));
  // I - {u1v1, u1v6} has exactly one cycle through v4, the 5-cycle v3v4v5u2v6.
  const auto h = delete_elements(I.graph, {"v4"}, {{"u1", "v1"}, {"u1", "v6"}});
  int length = 0;
  CHECK(oracle::count_paths(h.num_vertices(), oracle::edge_pairs(h), -1, h.id("v3"), h.id("v5"), 5, length) == 1);
  CHECK(length + 2 == 5);
}

TEST_CASE("fragment A") {
  const auto A = fragment_A();
  CHECK(A.graph.num_vertices() == 27);
  CHECK(A.graph.num_edges() == 36);
  CHECK(A.graph.label(A.endvertices.first) == "u1");
  CHECK(A.graph.label(A.endvertices.second) == "u3");
  CHECK(A.upper_path.size() == 13);
  CHECK(A.lower_path.size() == 13);
  // u2 separates the two halves.
  CHECK_FALSE(is_k_connected(A.graph, 2));
}

TEST_CASE("fragments C_n and D_n") {
  for (int n = 1; n <= 4; ++n) {
    const auto C = fragment_C(n);
    CHECK(C.graph.num_vertices() == static_cast<std::size_t>(2 * n + 3));
    CHECK(C.graph.num_edges() == static_cast<std::size_t>(2 * n + 3));
    CHECK(C.graph.max_degree() == 2);
    CHECK_FALSE(C.graph.has_edge("l", "r"));
    CHECK(C.graph.has_edge("l", "w1"));
    CHECK(C.graph.has_edge("w" + std::to_string(n + 1), "r"));
    CHECK(C.graph.has_edge("l", "v1"));

    const auto D = fragment_D(n);
    CHECK(D.graph.num_vertices() == static_cast<std::size_t>(4 * n + 5));
    const auto bd = block_decomposition(D.graph);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.block_degree(D.graph.id("m")) == 2);
    std::set<std::string> upper, lower;
    for (auto v : D.upper_path) upper.insert(D.graph.label(v));
    for (auto v : D.lower_path) lower.insert(D.graph.label(v));
    CHECK(upper.contains("w" + std::to_string(n)));
    CHECK(upper.contains("x1"));
    CHECK(lower.contains("x" + std::to_string(2 * n)));
    CHECK(lower.contains("x" + std::to_string(2 * n + 1)));
  }
  CHECK_THROWS_AS(fragment_C(0), Error);
  CHECK_THROWS_AS(fragment_D(-1), Error);
}

TEST_CASE("chain and apex graph counts follow 8|V(A)| + 7|V(B)| - 14 (+2)") {
  for (int n = 1; n <= 2; ++n) {
    for (auto type : {FragmentType::C, FragmentType::D}) {
      const auto B = fragment_B(type, n);
      const std::size_t chain = 8 * 27 + 7 * B.graph.num_vertices() - 14;
      CHECK(build_chain(type, n).graph.num_vertices() == chain);
      const auto G = build_G(type, n);
      CHECK(G.graph.num_vertices() == chain + 2);
    }
  }
  CHECK(build_chain(FragmentType::C, 1).graph.num_vertices() == 237);
  CHECK(build_chain(FragmentType::D, 1).graph.num_vertices() == 265);
  CHECK(build_G(FragmentType::C, 1).graph.num_vertices() == 239);
  CHECK(build_G(FragmentType::D, 1).graph.num_vertices() == 267);
}

TEST_CASE("apexes see exactly the upper and lower paths") {
  const auto G = build_G(FragmentType::D, 1);
  const auto& g = G.graph;
  std::set<VertexId> upper(G.upper_path.begin(), G.upper_path.end());
  std::set<VertexId> lower(G.lower_path.begin(), G.lower_path.end());
  std::set<VertexId> ns(g.neighbors(*G.s).begin(), g.neighbors(*G.s).end());
  std::set<VertexId> nt(g.neighbors(*G.t).begin(), g.neighbors(*G.t).end());
  CHECK(ns == upper);
  CHECK(nt == lower);
  CHECK(G.u2_set.size() == 8);
  CHECK(G.junctions.size() == 16);  // J0..J8 and L1..L7
}

TEST_CASE("junction aliases resolve to canonical labels") {
  const auto G = build_G(FragmentType::C, 1);
  CHECK(G.canonical("A3:u3") == "L3");
  CHECK(G.canonical("B3:l") == "L3");
  CHECK(G.canonical("B3:r") == "J3");
  CHECK(G.canonical("A4:u1") == "J3");
  CHECK(G.canonical("B3:w1") == "B3:w1");
  CHECK(G.resolve("A1:u1") == G.graph.id("J0"));
}

TEST_CASE("the block path between l^3 and r^3 is exactly B^3") {
  const auto chain = build_chain(FragmentType::C, 2);
  const auto h = block_path(chain.graph, "L3", "J3");
  CHECK(h.num_vertices() == 7);
  CHECK(h.num_edges() == 7);
}

TEST_CASE("apex graphs are 3-connected") {
  for (int n = 1; n <= 2; ++n) {
    CHECK(is_k_connected(build_G(FragmentType::C, n).graph, 3));
    CHECK(is_k_connected(build_G(FragmentType::D, n).graph, 3));
  }
  // The chain alone has cut vertices at the junctions.
  CHECK_FALSE(is_k_connected(build_chain(FragmentType::C, 1).graph, 2));
}

TEST_CASE("the printed apex list names edges absent from G(C_n)") {
  const auto G = build_G(FragmentType::C, 1);
  const auto apex = gc_formula_apex_edges(1);
  CHECK(apex.size() == 8);
  int missing = 0;
  for (const auto& [a, b] : apex)
    if (!G.graph.has_edge(a, b)) ++missing;
  CHECK(missing == 2);
  CHECK_THROWS_WITH_AS(certificate_cactus_GC(1, Graph{}), doctest::Contains("is not an edge"), Error);
}
