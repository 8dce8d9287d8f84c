#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tiered/inversions.hpp"
#include "tiered/sandpile.hpp"
#include "tiered/spanning.hpp"

using namespace tiered;

TEST_CASE("rooted tree structure") {
  std::vector<Edge> edges{{1, 2}, {2, 3}, {2, 4}};
  RootedTree t(4, edges, 1);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(3) == 2);
  CHECK(t.depth(4) == 2);
  CHECK(t.is_descendant(3, 1));
  CHECK_FALSE(t.is_descendant(3, 4));
  CHECK_THROWS_AS(RootedTree(4, std::vector<Edge>{{1, 2}, {3, 4}}, 1), Error);
  CHECK_THROWS_AS(RootedTree(4, edges, 5), Error);
}

TEST_CASE("tree inversions of a path rooted at its top label") {
  // 3 - 2 - 1 rooted at 3: pairs (3,2), (3,1), (2,1).
  std::vector<Edge> edges{{1, 2}, {2, 3}};
  CHECK(tree_inversions(RootedTree(3, edges, 3)) == 3);
  CHECK(tree_inversions(RootedTree(3, edges, 1)) == 0);
}

TEST_CASE("kappa on a complete graph counts tree inversions") {
  std::mt19937_64 rng(4);
  const Graph k5 = Graph::complete(5);
  for (EdgeSet tree : spanning_trees(k5)) {
    RootedTree t(5, k5.edges_of(tree), 1 + static_cast<int>(rng() % 5));
    // In K_n every {p(i), j} is an edge, and the root never counts.
    int expected = 0;
    for (Vertex i = 1; i <= 5; ++i)
      for (Vertex j = 1; j < i; ++j) expected += i != t.root() && t.is_descendant(j, i);
    CHECK(kappa_inversions(k5, t) == expected);
  }
}

TEST_CASE("kappa generating function is T(1, q) for every root") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = fixtures::random_connected_graph(3 + trial % 5, 0.45, rng);
    const Polynomial target = oracle::tutte_deletion_contraction(g).at_x_equals_one();
    for (Vertex root = 1; root <= g.vertex_count(); ++root) CHECK(kappa_enumerator(g, root) == target);
  }
}

TEST_CASE("kappa rejects trees outside the graph") {
  Graph g(3, {{1, 2}, {2, 3}});
  std::vector<Edge> edges{{1, 3}, {2, 3}};
  CHECK_THROWS_AS(kappa_inversions(g, RootedTree(3, edges, 1)), Error);
}

TEST_CASE("generalized inversions equal kappa on the compatibility graph") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto tree = fixtures::random_tiered_graph(3 + trial % 4, 2 + trial % 2, 0.0, rng);
    auto cg = compatibility_graph(tree);
    for (Vertex root = 1; root <= tree.vertex_count(); ++root) {
      RootedTree t(tree.vertex_count(), tree.graph.edges(), root);
      CHECK(generalized_inversions(t, tree.tier) == kappa_inversions(cg.graph, t));
    }
  }
}

TEST_CASE("generalized inversions count equal repeated labels") {
  // Path 1 - 2 - 3 rooted at 1, tiers 1,2,1; vertices 2 and 3 both labelled 5.
  std::vector<Edge> edges{{1, 2}, {2, 3}};
  RootedTree t(3, edges, 1);
  std::vector<int> tier{1, 2, 1};
  CHECK(generalized_inversions(t, tier) == 0);
  // With labels (1, 5, 5): i = 2, j = 3 has equal labels and p(2) = 1 is
  // compatible with 3 only if label 1 < label 5 with tier 1 < tier 1: no.
  CHECK(generalized_inversions(t, tier, std::vector<int>{1, 5, 5}) == 0);
  // Tiers 1,2,2 make 1 and 3 compatible: the equal pair now counts.
  CHECK(generalized_inversions(t, std::vector<int>{1, 2, 2}, std::vector<int>{1, 5, 5}) == 1);
  CHECK(generalized_inversions(t, std::vector<int>{1, 2, 2}, std::vector<int>{1, 5, 6}) == 0);
}
