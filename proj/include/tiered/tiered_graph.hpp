#pragma once

#include <span>
#include <string>
#include <vector>

#include "tiered/errors.hpp"
#include "tiered/graph.hpp"

namespace tiered {

// A graph with a tier t(v) in 1..tiers for every vertex.
struct TieredGraph {
  Graph graph;
  std::vector<int> tier;  // tier[v - 1]
  int tiers = 0;
  bool empty_tiers_allowed = false;

  int vertex_count() const { return graph.vertex_count(); }
  int tier_of(Vertex v) const { return tier[v - 1]; }

  friend bool operator==(const TieredGraph&, const TieredGraph&) = default;
};

// Human-readable violations; empty means valid. Checks that every edge
// (i, j) with i < j has t(i) < t(j), that tiers lie in 1..tiers, and that
// no tier is empty unless empty_tiers_allowed.
std::vector<std::string> validate_tiered_graph(const TieredGraph& g);
inline bool is_valid(const TieredGraph& g) { return validate_tiered_graph(g).empty(); }

// i and j may be joined in a tiered graph with these tiers.
bool compatible(std::span<const int> tier, Vertex i, Vertex j);

// Every compatible pair is an edge. Throws NonSurjectiveTiering.
TieredGraph complete_tiered_graph(std::span<const int> tier);
bool is_complete_tiered(const TieredGraph& g);

// Compatible non-edges of a tiered tree. Throws NotATree.
std::vector<Edge> compatible_pairs(const TieredGraph& tree);
// The tree plus all its compatible pairs. Throws NotATree.
TieredGraph compatibility_graph(const TieredGraph& tree);

bool is_tree(const Graph& g);

// t*(i) = tiers + 1 - t(n + 1 - i); {i, j} is an edge iff {n+1-i, n+1-j} is.
// Throws TooFewTiers when tiers < 2.
TieredGraph dual_graph(const TieredGraph& g);
// The same reflection without the tier-count precondition.
TieredGraph reflect(const TieredGraph& g);
inline Vertex reflect_vertex(int n, Vertex i) { return n + 1 - i; }

// Image of a forest under the reflection; a forest of the dual graph.
std::vector<Edge> forest_dual(int vertex_count, std::span<const Edge> forest);
// Every acyclic edge subset. Throws CapExceeded above caps.slim_edges edges.
std::vector<EdgeSet> spanning_forests(const Graph& g, const Caps& caps = {});

// Tiers renumbered 1..k over the tiers actually used, order preserved.
TieredGraph compress_tiers(const TieredGraph& g);
// Isomorphism preserving compressed tiers.
bool tiered_isomorphic(const TieredGraph& a, const TieredGraph& b);

}  // namespace tiered
