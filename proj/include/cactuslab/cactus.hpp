#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactuslab/blocks.hpp"
#include "cactuslab/families.hpp"
#include "cactuslab/graph.hpp"

namespace cactuslab {

enum class Goodness { good, one_good, two_good, none };
std::string to_string(Goodness g);

/// A path given by its vertex labels. In a cactus it is an edge path when
/// every one of its edges is an edge block.
struct EdgePath {
  std::vector<std::string> vertices;
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

struct CactusReport {
  bool is_cactus = false;
  bool is_even = false;
  std::vector<int> block_degrees;  // indexed by vertex id of the analyzed graph
  std::size_t cycle_blocks = 0;
  std::size_t edge_blocks = 0;
  Goodness classification = Goodness::none;
  /// Empty for good, one path for one_good, two for two_good.
  std::vector<EdgePath> witness_paths;
};

/// Classifies a connected graph against the cactus taxonomy, reporting the
/// strongest of good > 1-good > 2-good. A single vertex is a good cactus
/// with no blocks. Throws on disconnected input.
CactusReport analyze_cactus(const Graph& q);

/// Throws unless q is a cactus and p is an edge path of q.
bool is_p_good(const Graph& q, const EdgePath& p);
/// Throws if p1 and p2 share two or more vertices or are not edge paths.
bool is_p1p2_good(const Graph& q, const EdgePath& p1, const EdgePath& p2);

/// The edge path of the cactus q between x and y, if the block-cut tree
/// path from x to y passes through edge blocks only.
std::optional<EdgePath> edge_path_between(const Graph& q, const std::string& x, const std::string& y);

/// Every edge path P of q (one orientation each, at least two edges) for
/// which q is P-good.
std::vector<EdgePath> all_p_good_witnesses(const Graph& q);

enum class DeletionCase { I, II, violated };
std::string to_string(DeletionCase c);

struct DeletionComponent {
  Graph graph;
  CactusReport report;
};

struct DeletionReport {
  int lemma = 7;  // 6 when the max-degree-three statement applies
  std::vector<DeletionComponent> components;
  DeletionCase deletion_case = DeletionCase::violated;
  int good_count = 0;
  int q1 = 0;  // 1-good components
  int q2 = 0;  // 2-good components
  int other_count = 0;
  std::vector<int> bag_counts;  // filled by the chart-aware overload
};

/// Deletes s and t from the good cactus k and checks the component mix
/// against the two-case statements (the max-degree-three one when
/// `max_degree_3` is set and Δ(k) <= 3).
DeletionReport classify_deletion(const Graph& k, const std::string& s, const std::string& t,
                                 bool max_degree_3);

struct Interval {
  int a = 0;
  int b = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BagReport {
  Interval interval;
  std::vector<std::string> bags;  // fragment copy ids
};

/// Minimal interval (a, b) with q inside G^-[l^a, r^b], and the fragment
/// copies whose endvertices lie in q while some of their vertices do not.
BagReport bags(const Graph& q, const FragmentChart& chart);

/// Vertex labels of G^-[l^a, r^b] for the chart's chain.
std::vector<std::string> chain_interval_vertices(const FragmentChart& chart, int a, int b);
/// Vertex labels of G^-[r^a, l^b].
std::vector<std::string> chain_inner_interval_vertices(const FragmentChart& chart, int a, int b);

struct BagBoundCheck {
  std::string component;  // first label, for messages
  Goodness goodness = Goodness::none;
  Interval interval;
  int bag_count = 0;
  int lower_bound = 0;
  bool bound_holds = false;
  /// Zero bags with b = a + 2 on a 1-good component: every witness path lies
  /// in G^-[r^a, l^b]. Vacuously true otherwise.
  bool inner_path_clause_holds = true;
};

/// Runs the bag lower bounds on every component of K - s - t for a spanning
/// good even cactus K of the chart's G.
std::vector<BagBoundCheck> check_bag_bounds(const Graph& k, const FragmentChart& chart);

}  // namespace cactuslab
