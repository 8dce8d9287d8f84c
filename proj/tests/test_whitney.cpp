#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tiered/spanning.hpp"
#include "tiered/whitney.hpp"

using namespace tiered;

namespace {

// Path with tiers 4, 2, 3, 2 and the star-with-tail, both with compressed tiers.
TieredGraph left_path() { return {Graph(4, {{1, 4}, {1, 3}, {2, 3}}), {1, 1, 2, 3}, 3, false}; }
TieredGraph right_star() { return {Graph(5, {{1, 5}, {2, 5}, {3, 5}, {1, 4}}), {1, 2, 2, 2, 3}, 3, false}; }

}  // namespace

TEST_CASE("identify aligns tiers and keeps both label orders") {
  auto g = identify(left_path(), 2, right_star(), 4);
  CHECK(g.vertex_count() == 8);
  CHECK(g.graph.edge_count() == 7);
  CHECK(g.tiers == 4);
  CHECK(is_valid(g));
  CHECK(g.graph.connected());
}

TEST_CASE("cleave undoes identify") {
  auto g1 = left_path(), g2 = right_star();
  auto glued = glue(g1, g2, std::vector<Attachment>{{2, 4}});
  const Vertex v = glued.left_map[2];
  auto parts = cleave(glued.graph, v);
  const bool straight = tiered_isomorphic(parts.first, g1) && tiered_isomorphic(parts.second, g2);
  const bool crossed = tiered_isomorphic(parts.first, g2) && tiered_isomorphic(parts.second, g1);
  CHECK((straight || crossed));
  auto again = identify(parts.first, parts.first_vertex, parts.second, parts.second_vertex);
  CHECK(tiered_isomorphic(again, glued.graph));
}

TEST_CASE("cleave needs a cut vertex") {
  TieredGraph cycle = complete_tiered_graph(std::vector<int>{1, 2, 3});
  try {
    cleave(cycle, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACutVertex);
  }
}

TEST_CASE("gluing errors") {
  auto g1 = left_path(), g2 = right_star();
  try {
    glue(g1, g2, std::vector<Attachment>{{1, 1}, {1, 2}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OverlappingVertexSets);
  }
  try {
    // 1-3 spans one tier in g1, 1-5 spans two in g2.
    two_sum(g1, 1, 3, g2, 1, 5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidAttachment);
  }
  CHECK_THROWS_AS(identify(g1, 9, g2, 1), Error);
}

TEST_CASE("two-sum and twist share the Tutte polynomial") {
  std::mt19937_64 rng(77);
  int built = 0;
  for (int trial = 0; trial < 200 && built < 15; ++trial) {
    auto g1 = fixtures::random_tiered_graph(3 + trial % 3, 2 + trial % 2, 0.5, rng);
    auto g2 = fixtures::random_tiered_graph(3 + (trial / 3) % 3, 2 + (trial / 2) % 2, 0.5, rng);
    for (Vertex u1 = 1; u1 <= g1.vertex_count(); ++u1)
      for (Vertex v1 = u1 + 1; v1 <= g1.vertex_count(); ++v1)
        for (Vertex u2 = 1; u2 <= g2.vertex_count(); ++u2)
          for (Vertex v2 = u2 + 1; v2 <= g2.vertex_count(); ++v2) {
            if (g1.tier_of(u1) - g1.tier_of(v1) != g2.tier_of(u2) - g2.tier_of(v2)) continue;
            if (g1.graph.adjacent(u1, v1) && g2.graph.adjacent(u2, v2)) continue;
            auto s = two_sum(g1, u1, v1, g2, u2, v2);
            auto t = twist(g1, u1, v1, g2, u2, v2);
            CHECK(is_valid(s));
            CHECK(is_valid(t));
            CHECK(tutte_polynomial(s.graph) == tutte_polynomial(t.graph));
            CHECK(tutte_polynomial(t.graph) == oracle::tutte_deletion_contraction(t.graph));
            ++built;
            goto next;
          }
  next:;
  }
  CHECK(built == 15);
}

TEST_CASE("twisting across a single edge changes nothing up to isomorphism") {
  TieredGraph edge{Graph(2, {{1, 2}}), {1, 2}, 2, false};
  TieredGraph path{Graph(4, {{1, 2}, {2, 3}, {3, 4}}), {1, 2, 1, 2}, 2, false};
  auto s = two_sum(path, 1, 4, edge, 1, 2);
  auto t = twist(path, 1, 4, edge, 1, 2);
  CHECK(isomorphic(s.graph, t.graph));
  CHECK(s.graph.edge_count() == 4);
}
