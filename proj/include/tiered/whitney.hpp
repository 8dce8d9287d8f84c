#pragma once

#include <span>
#include <utility>

#include "tiered/tiered_graph.hpp"

namespace tiered {

struct Attachment {
  Vertex left;   // vertex of the first graph
  Vertex right;  // vertex of the second graph
};

// Disjoint union of g1 and g2 with each attachment pair merged into one
// vertex. The tiers of g2 are shifted so merged vertices share a tier; the
// labels interleave so that both label orders are kept.
// Throws UnknownVertex, OverlappingVertexSets (a vertex used twice),
// InvalidAttachment (inconsistent tier offsets or label orders, or a merged
// edge present in both graphs).
struct Glued {
  TieredGraph graph;
  std::vector<Vertex> left_map;   // g1 label -> result label
  std::vector<Vertex> right_map;  // g2 label -> result label
};
Glued glue(const TieredGraph& g1, const TieredGraph& g2, std::span<const Attachment> pairs);

TieredGraph identify(const TieredGraph& g1, Vertex v1, const TieredGraph& g2, Vertex v2);

struct Cleft {
  TieredGraph first;   // holds the smallest label other than the cut vertex
  TieredGraph second;
  Vertex first_vertex;   // copy of the cut vertex in `first`
  Vertex second_vertex;
};
// Splits at a cut vertex; both parts keep a copy of v. Throws NotACutVertex.
Cleft cleave(const TieredGraph& g, Vertex v);

// Glue at u1~u2 and v1~v2.
TieredGraph two_sum(const TieredGraph& g1, Vertex u1, Vertex v1,
                    const TieredGraph& g2, Vertex u2, Vertex v2);

// The two-sum with g2 turned over: u1 meets v2 and v1 meets u2. Realised by
// gluing g1 to the reflection of g2. Throws InvalidAttachment when the
// untwisted two-sum is not a valid gluing.
TieredGraph twist(const TieredGraph& g1, Vertex u1, Vertex v1,
                  const TieredGraph& g2, Vertex u2, Vertex v2);

}  // namespace tiered
