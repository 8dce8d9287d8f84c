#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tiered/spanning.hpp"

using namespace tiered;

TEST_CASE("spanning trees match the subset oracle and the Matrix-Tree count") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = fixtures::random_connected_graph(2 + trial % 6, 0.5, rng);
    auto trees = spanning_trees(g);
    auto expected = oracle::spanning_trees_by_subsets(g);
    std::sort(trees.begin(), trees.end());
    CHECK(trees == expected);
    CHECK(count_spanning_trees(g) == static_cast<long>(trees.size()));
  }
}

TEST_CASE("Cayley counts for complete graphs") {
  for (int n = 1; n <= 7; ++n) {
    Integer expected = n == 1 ? Integer(1) : pow(Integer(n), n - 2);
    CHECK(count_spanning_trees(Graph::complete(n)) == expected);
  }
}

TEST_CASE("Tutte polynomials of small complete graphs") {
  CHECK(tutte_polynomial(Graph::complete(3)).to_string() == "x^2 + x + y");
  CHECK(tutte_polynomial(Graph::complete(4)).to_string() == "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3");
}

TEST_CASE("activity Tutte polynomial equals deletion-contraction") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = fixtures::random_connected_graph(2 + trial % 6, 0.5, rng);
    CHECK(tutte_polynomial(g) == oracle::tutte_deletion_contraction(g));
  }
}

TEST_CASE("Tutte polynomial does not depend on the edge order") {
  std::mt19937_64 rng(1);
  Graph g = fixtures::random_connected_graph(6, 0.5, rng);
  auto base = tutte_polynomial(g);
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(tutte_polynomial(g, EdgeOrder::random(g, seed)) == base);
}

TEST_CASE("activities of a single tree") {
  Graph k3 = Graph::complete(3);
  auto order = EdgeOrder::lexicographic(k3);
  // Tree {12, 13}: edge 23 closes a cycle with larger edges only.
  Activity a = activities(k3, 0b011, order);
  CHECK(a.internal == 2);
  CHECK(a.external == 0);
  Activity b = activities(k3, 0b110, order);
  CHECK(b.internal == 0);
  CHECK(b.external == 1);
  CHECK_THROWS_AS(activities(k3, 0b001, order), Error);
}

TEST_CASE("spanning tree errors") {
  CHECK_THROWS_AS(spanning_trees(Graph(3, {{1, 2}})), Error);
  Caps tight;
  tight.spanning_trees = 10;
  try {
    spanning_trees(Graph::complete(5), tight);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(EdgeOrder(std::vector<int>{0, 0}), Error);
}
