#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "cactuslab/cactus.hpp"
#include "cactuslab/families.hpp"
#include "cactuslab/search.hpp"
#include "cactuslab/verify.hpp"

using namespace cactuslab;

namespace {

Graph cycle_graph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

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

Graph star(int leaves) {
  Graph g;
  g.add_vertex("c");
  for (int i = 0; i < leaves; ++i) g.add_edge(0, g.add_vertex("leaf" + std::to_string(i)));
  return g;
}

long enumerate_count(const Graph& g, const CactusConstraints& c) {
  return static_cast<long>(
      enumerate_spanning_even_cacti(g, c, [](const Graph&) { return true; }).count);
}

}  // namespace

TEST_CASE("budget parsing") {
  CHECK(Budget::parse("30s").wall == std::chrono::milliseconds(30000));
  CHECK(Budget::parse("10m").wall == std::chrono::milliseconds(600000));
  CHECK(Budget::parse("2h").wall == std::chrono::milliseconds(7200000));
  CHECK(Budget::parse("90").wall == std::chrono::milliseconds(90000));
  CHECK(Budget::parse("250ms").wall == std::chrono::milliseconds(250));
  CHECK_THROWS_AS(Budget::parse("fast"), Error);
  CHECK_THROWS_AS(Budget::parse("3d"), Error);
  CHECK_THROWS_AS(Budget::parse(""), Error);
  CHECK_FALSE(Budget::unlimited().wall.has_value());
}

TEST_CASE("hamilton cycles on known graphs") {
  const auto o = hamilton_cycle(cycle_graph(7));
  REQUIRE(o.found());
  CHECK(check_hamilton_cycle(cycle_graph(7), o.witness_sequence).ok());
  const auto p = hamilton_cycle(petersen());
  CHECK(p.status == SearchStatus::none);
  CHECK(p.exhaustive);
  CHECK(hamilton_cycle(star(3)).status == SearchStatus::none);
}

TEST_CASE("hamilton paths with and without endpoints") {
  const auto pg = petersen();
  const auto o = hamilton_path(pg, std::nullopt);
  REQUIRE(o.found());
  CHECK(is_hamilton_path(pg, o.witness_sequence));
  CHECK(hamilton_path(star(3), std::nullopt).status == SearchStatus::none);
  const auto c = cycle_graph(6);
  CHECK(hamilton_path(c, std::pair<std::string, std::string>{"c0", "c1"}).found());
  CHECK(hamilton_path(c, std::pair<std::string, std::string>{"c0", "c2"}).status == SearchStatus::none);
}

TEST_CASE("k-trees and k-walks") {
  const auto s = star(4);
  CHECK(k_tree(s, 4).found());
  CHECK(k_tree(s, 3).status == SearchStatus::none);
  CHECK(k_walk(s, 4).found());
  CHECK(k_walk(s, 3).status == SearchStatus::none);
  const auto w = k_walk(s, 4);
  CHECK(is_k_walk(s, w.witness_sequence, 4));
  CHECK_FALSE(is_k_walk(s, w.witness_sequence, 3));
  const auto pg = petersen();
  const auto t = k_tree(pg, 2);
  REQUIRE(t.found());  // the Petersen graph has a Hamilton path
  CHECK(is_k_tree(pg, t.witness_edges, 2));
  const auto w2 = k_walk(pg, 2);
  REQUIRE(w2.found());
  CHECK(is_k_walk(pg, w2.witness_sequence, 2));
}

TEST_CASE("spanning cactus counts on small cycles") {
  CactusConstraints good;
  // C4: the cycle itself plus four spanning paths.
  CHECK(enumerate_count(cycle_graph(4), good) == 5);
  // C5 is odd, so only the five spanning paths remain.
  CHECK(enumerate_count(cycle_graph(5), good) == 5);
  CHECK(oracle::count_spanning_cacti(cycle_graph(4), true) == 5);
}

TEST_CASE("enumeration matches brute force on random graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + trial % 5;
    const auto g = oracle::random_connected_graph(rng, n, 2 + trial % 4);
    CactusConstraints good;
    CHECK(enumerate_count(g, good) == oracle::count_spanning_cacti(g, true));
  }
}

TEST_CASE("constraint handling") {
  const auto c = cycle_graph(6);
  CactusConstraints pinned;
  pinned.required_edges = {{"c0", "c1"}};
  pinned.forbidden_edges = {{"c2", "c3"}};
  const auto o = spanning_even_cactus(c, pinned);
  REQUIRE(o.found());
  const auto q = spanning_subgraph(c, o.witness_edges);
  CHECK(q.has_edge("c0", "c1"));
  CHECK_FALSE(q.has_edge("c2", "c3"));
  CHECK(satisfies_constraints(c, q, pinned));

  CactusConstraints degree_one;
  degree_one.required_block_degree_1 = {"c0", "c2"};
  // C5 is odd, so only spanning paths are left and their ends are adjacent.
  CHECK(spanning_even_cactus(cycle_graph(5), degree_one).status == SearchStatus::none);
  // In C6 the cycle itself gives every vertex block degree one.
  CHECK(spanning_even_cactus(c, degree_one).found());

  CactusConstraints bad;
  bad.required_edges = {{"c0", "c2"}};
  CHECK_THROWS_AS(spanning_even_cactus(c, bad), Error);
}

TEST_CASE("budgets stop a search") {
  Budget tiny;
  tiny.nodes = 10;
  const auto o = spanning_even_cactus(build_G(FragmentType::C, 1).graph, CactusConstraints{}, tiny);
  CHECK(o.status == SearchStatus::timeout);
  CHECK_FALSE(o.exhaustive);
}

TEST_CASE("linear forests with prescribed endpoints") {
  const auto c = cycle_graph(6);
  const auto o = linear_forest(c, {{"c0", "c2"}, {"c3", "c5"}});
  REQUIRE(o.found());
  CHECK(is_linear_forest(c, o.witness_edges, {{"c0", "c2"}, {"c3", "c5"}}));
  CHECK(linear_forest(c, {{"c0", "c3"}, {"c1", "c4"}}).status == SearchStatus::none);
}

TEST_CASE("exhaustive searches on the gadgets") {
  const auto A = fragment_A();
  CactusConstraints kA;
  kA.required_block_degree_1 = {"u1", "u3"};
  const auto found = spanning_even_cactus(A.graph, kA);
  REQUIRE(found.found());
  CHECK(satisfies_constraints(A.graph, spanning_subgraph(A.graph, found.witness_edges), kA));
  for (int n = 1; n <= 2; ++n) {
    CactusConstraints ends;
    ends.required_block_degree_1 = {"l", "r"};
    CHECK(spanning_even_cactus(fragment_C(n).graph, ends).status == SearchStatus::none);
    CHECK(spanning_even_cactus(fragment_D(n).graph, ends).status == SearchStatus::none);
  }
}
